//! Finite Boolean algebras as powersets of a named atom set.
//!
//! An element is identified with the set of atoms below it, so join, meet
//! and complement are union, intersection and flip of an atom mask.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::limits::{self, MAX_ATOMS};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteBooleanAlgebra {
    atom_names: Vec<String>,
}

/// Builds the powerset algebra over `atom_names`.
pub fn make_algebra<I, S>(atom_names: I) -> Result<FiniteBooleanAlgebra>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    FiniteBooleanAlgebra::new(atom_names)
}

impl FiniteBooleanAlgebra {
    pub fn new<I, S>(atom_names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atom_names: Vec<String> = atom_names.into_iter().map(Into::into).collect();
        if atom_names.is_empty() {
            return Err(Error::TrivialAlgebra);
        }
        limits::ensure("a Boolean algebra", atom_names.len(), MAX_ATOMS)?;
        let mut seen = HashSet::new();
        for name in &atom_names {
            if name.is_empty() {
                return Err(Error::EmptyAtomName);
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Self { atom_names })
    }

    /// Atoms named `a`, `b`, `c`, ...
    pub fn with_atoms(n: usize) -> Result<Self> {
        Self::new(default_atom_names(n))
    }

    pub fn n_atoms(&self) -> usize {
        self.atom_names.len()
    }

    pub fn carrier_size(&self) -> usize {
        1 << self.n_atoms()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn top_mask(&self) -> u32 {
        ((1u64 << self.n_atoms()) - 1) as u32
    }

    pub fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn zero(&self) -> Element<'_> {
        Element { alg: self, mask: 0 }
    }

    pub fn one(&self) -> Element<'_> {
        Element {
            alg: self,
            mask: self.top_mask(),
        }
    }

    pub fn element(&self, mask: u32) -> Result<Element<'_>> {
        if mask > self.top_mask() {
            return Err(Error::BadElement(format!("mask {mask:#b}")));
        }
        Ok(Element { alg: self, mask })
    }

    pub(crate) fn elem(&self, mask: u32) -> Element<'_> {
        debug_assert!(mask <= self.top_mask());
        Element { alg: self, mask }
    }

    /// All elements in ascending mask order.
    pub fn elements(&self) -> impl Iterator<Item = Element<'_>> + '_ {
        (0..=self.top_mask()).map(move |m| self.elem(m))
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atom_names.iter().position(|a| a == name)
    }

    pub fn atom(&self, name: &str) -> Result<Element<'_>> {
        self.atom_index(name)
            .map(|i| self.elem(1 << i))
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    /// The join of the named atoms; `[]` is zero.
    pub fn element_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Element<'_>> {
        let mut mask = 0;
        for n in names {
            mask |= self.atom(n.as_ref())?.mask;
        }
        Ok(self.elem(mask))
    }

    /// Parses `0`, `1`, an atom name, `a+b+c`, or (when every atom name is a
    /// single character) the juxtaposition `abc`.
    pub fn parse_element(&self, s: &str) -> Result<Element<'_>> {
        let s = s.trim();
        if let Some(i) = self.atom_index(s) {
            return Ok(self.elem(1 << i));
        }
        match s {
            "0" => return Ok(self.zero()),
            "1" => return Ok(self.one()),
            _ => {}
        }
        if s.contains('+') {
            let mut mask = 0;
            for part in s.split('+') {
                mask |= self.parse_element(part)?.mask;
            }
            return Ok(self.elem(mask));
        }
        if !s.is_empty() && self.atom_names.iter().all(|a| a.chars().count() == 1) {
            let mut mask = 0;
            for c in s.chars() {
                let i = self
                    .atom_index(c.encode_utf8(&mut [0; 4]))
                    .ok_or_else(|| Error::BadElement(s.to_string()))?;
                mask |= 1 << i;
            }
            return Ok(self.elem(mask));
        }
        Err(Error::BadElement(s.to_string()))
    }

    /// Parses a comma-separated element list such as `"a, b+c"`.
    pub fn parse_family(&self, s: &str) -> Result<Family<'_>> {
        let mut set = ElemSet::empty(self.n_atoms());
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            set.insert(self.parse_element(part)?.mask);
        }
        Ok(Family::from_set(self, set))
    }

    pub fn atoms(&self) -> Vec<Element<'_>> {
        (0..self.n_atoms()).map(|i| self.elem(1 << i)).collect()
    }

    pub fn names_of(&self, mask: u32) -> Vec<String> {
        (0..self.n_atoms())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.atom_names[i].clone())
            .collect()
    }

    pub(crate) fn render(&self, mask: u32) -> String {
        if mask == 0 {
            return "0".into();
        }
        if mask == self.top_mask() && self.n_atoms() > 1 {
            return "1".into();
        }
        let names = self.names_of(mask);
        if self.atom_names.iter().all(|a| a.chars().count() == 1) {
            names.concat()
        } else {
            names.join("+")
        }
    }
}

pub fn default_atom_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("a{i}")
            }
        })
        .collect()
}

pub fn atoms(alg: &FiniteBooleanAlgebra) -> Vec<Element<'_>> {
    alg.atoms()
}

pub fn atoms_below(x: Element<'_>) -> Vec<Element<'_>> {
    x.atoms_below()
}

/// In a finite algebra every ultrafilter is principal at an atom.
pub fn ultrafilters(alg: &FiniteBooleanAlgebra) -> Vec<Family<'_>> {
    alg.atoms().into_iter().map(|a| a.principal_filter()).collect()
}

/// A member of a [`FiniteBooleanAlgebra`], stored as its atom mask.
#[derive(Clone, Copy)]
pub struct Element<'a> {
    alg: &'a FiniteBooleanAlgebra,
    mask: u32,
}

impl<'a> Element<'a> {
    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn is_one(&self) -> bool {
        self.mask == self.alg.top_mask()
    }

    pub fn is_atom(&self) -> bool {
        self.mask.count_ones() == 1
    }

    pub fn join(self, other: Element<'a>) -> Result<Element<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(self.alg.elem(self.mask | other.mask))
    }

    pub fn meet(self, other: Element<'a>) -> Result<Element<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(self.alg.elem(self.mask & other.mask))
    }

    pub fn complement(self) -> Element<'a> {
        self.alg.elem(!self.mask & self.alg.top_mask())
    }

    pub fn leq(self, other: Element<'a>) -> Result<bool> {
        self.alg.ensure_same(other.alg)?;
        Ok(self.mask & !other.mask == 0)
    }

    pub fn atoms_below(self) -> Vec<Element<'a>> {
        (0..self.alg.n_atoms())
            .filter(|i| self.mask >> i & 1 == 1)
            .map(|i| self.alg.elem(1 << i))
            .collect()
    }

    /// `↑x`
    pub fn principal_filter(self) -> Family<'a> {
        Family::from_set(self.alg, ElemSet::from_masks(self.alg.n_atoms(), [self.mask]).up_closure())
    }

    /// `↓x`
    pub fn principal_ideal(self) -> Family<'a> {
        Family::from_set(self.alg, ElemSet::from_masks(self.alg.n_atoms(), [self.mask]).down_closure())
    }

    pub fn names(&self) -> Vec<String> {
        self.alg.names_of(self.mask)
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.alg.same_as(other.alg)
    }
}

impl Eq for Element<'_> {}

impl Hash for Element<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state)
    }
}

impl Ord for Element<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mask.cmp(&other.mask)
    }
}

impl PartialOrd for Element<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alg.render(self.mask))
    }
}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3() -> FiniteBooleanAlgebra {
        make_algebra(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(b3().carrier_size(), 8);
        let b1 = make_algebra(["a"]).unwrap();
        assert_eq!(b1.carrier_size(), 2);
        assert_eq!(b1.one().mask(), 1);
        assert!(matches!(make_algebra(Vec::<String>::new()), Err(Error::TrivialAlgebra)));
        assert!(matches!(make_algebra(["a", "a"]), Err(Error::DuplicateAtom(_))));
        assert!(matches!(make_algebra(["a", ""]), Err(Error::EmptyAtomName)));
        assert!(matches!(
            FiniteBooleanAlgebra::with_atoms(21),
            Err(Error::OverCap { max: 20, .. })
        ));
        assert_eq!(FiniteBooleanAlgebra::with_atoms(20).unwrap().carrier_size(), 1 << 20);
    }

    #[test]
    fn element_algebra() {
        let b = b3();
        let e = |s: &str| b.parse_element(s).unwrap();
        assert_eq!(e("a").join(e("b")).unwrap(), e("ab"));
        assert_eq!(e("ab").meet(e("ac")).unwrap(), e("a"));
        assert_eq!(e("a").complement(), e("bc"));
        assert!(e("a").leq(e("ab")).unwrap());
        assert!(!e("ab").leq(e("a")).unwrap());
        assert_eq!(e("a+b"), e("ab"));
        assert_eq!(e("1"), b.one());
        assert_eq!(e("abc").to_string(), "1");
        assert_eq!(e("0").to_string(), "0");
    }

    #[test]
    fn cross_algebra_operands_rejected() {
        let b = b3();
        let other = make_algebra(["x", "y", "z"]).unwrap();
        let x = b.atom("a").unwrap();
        let y = other.atom("x").unwrap();
        assert!(matches!(x.join(y), Err(Error::AlgebraMismatch)));
        assert!(matches!(x.leq(y), Err(Error::AlgebraMismatch)));
        let twin = b3();
        assert!(x.join(twin.atom("b").unwrap()).is_ok());
    }

    #[test]
    fn atoms_and_atoms_below() {
        let b = b3();
        let names: Vec<String> = atoms(&b).iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        let ab = b.parse_element("ab").unwrap();
        assert_eq!(atoms_below(ab), vec![b.atom("a").unwrap(), b.atom("b").unwrap()]);
        assert!(atoms_below(b.zero()).is_empty());
    }

    #[test]
    fn boolean_axioms_exhaustive() {
        for n in 1..=3 {
            let b = FiniteBooleanAlgebra::with_atoms(n).unwrap();
            let els: Vec<_> = b.elements().collect();
            for &x in &els {
                assert_eq!(x.meet(x.complement()).unwrap(), b.zero());
                assert_eq!(x.join(x.complement()).unwrap(), b.one());
                assert!(x.leq(x).unwrap());
                for &y in &els {
                    if x.leq(y).unwrap() && y.leq(x).unwrap() {
                        assert_eq!(x, y);
                    }
                    for &z in &els {
                        let (j, m) = (Element::join, Element::meet);
                        assert_eq!(j(j(x, y).unwrap(), z).unwrap(), j(x, j(y, z).unwrap()).unwrap());
                        assert_eq!(m(m(x, y).unwrap(), z).unwrap(), m(x, m(y, z).unwrap()).unwrap());
                        assert_eq!(
                            m(x, j(y, z).unwrap()).unwrap(),
                            j(m(x, y).unwrap(), m(x, z).unwrap()).unwrap()
                        );
                        assert_eq!(
                            j(x, m(y, z).unwrap()).unwrap(),
                            m(j(x, y).unwrap(), j(x, z).unwrap()).unwrap()
                        );
                        if x.leq(y).unwrap() && y.leq(z).unwrap() {
                            assert!(x.leq(z).unwrap());
                        }
                    }
                }
            }
            // atoms are exactly the minimal nonzero elements
            for &x in &els {
                let minimal = !x.is_zero()
                    && els.iter().all(|&y| y.is_zero() || y == x || !y.leq(x).unwrap());
                assert_eq!(minimal, x.is_atom());
            }
        }
    }

    #[test]
    fn ultrafilters_are_principal_at_atoms() {
        let b = b3();
        let ufs = ultrafilters(&b);
        assert_eq!(ufs.len(), 3);
        for u in &ufs {
            assert_eq!(u.len(), 4);
            let c = u.classify();
            assert!(c.is_proper_filter && c.is_ultrafilter);
            // prime
            for x in b.elements() {
                for y in b.elements() {
                    if u.contains(x.join(y).unwrap()) {
                        assert!(u.contains(x) || u.contains(y));
                    }
                }
            }
        }
        let b1 = make_algebra(["a"]).unwrap();
        let ufs = ultrafilters(&b1);
        assert_eq!(ufs.len(), 1);
        assert_eq!(ufs[0].masks().collect::<Vec<_>>(), vec![1]);
        let b5 = FiniteBooleanAlgebra::with_atoms(5).unwrap();
        assert!(ultrafilters(&b5).iter().all(|u| u.len() == 16));
    }
}
