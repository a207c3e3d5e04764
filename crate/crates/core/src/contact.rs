//! Binary contacts derived from ultracontacts, hypercontacts, and the
//! smallest and largest ultracontact inducing a given contact.

use std::fmt;

use serde::Serialize;

use crate::boolalg::FiniteBooleanAlgebra;
use crate::elemset::ElemSet;
use crate::error::{Axiom, Error, Result, Violation, WitnessValue};
use crate::families::Family;
use crate::limits::{self, CONTACT_MAX_ATOMS};
use crate::uca::{FamilySystem, Ultracontact};

/// A binary relation on `B`, stored as one row per element.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation<'a> {
    alg: &'a FiniteBooleanAlgebra,
    rows: Vec<ElemSet>,
}

impl<'a> Relation<'a> {
    pub fn empty(alg: &'a FiniteBooleanAlgebra) -> Result<Self> {
        limits::ensure("a contact relation", alg.n_atoms(), CONTACT_MAX_ATOMS)?;
        let n = alg.n_atoms();
        Ok(Self {
            alg,
            rows: vec![ElemSet::empty(n); alg.carrier_size()],
        })
    }

    pub fn from_fn(alg: &'a FiniteBooleanAlgebra, related: impl Fn(u32, u32) -> bool) -> Result<Self> {
        let mut r = Self::empty(alg)?;
        for x in 0..=alg.top_mask() {
            for y in 0..=alg.top_mask() {
                if related(x, y) {
                    r.rows[x as usize].insert(y);
                }
            }
        }
        Ok(r)
    }

    /// The pairs as given, plus their mirror images when `symmetric`.
    pub fn from_pairs(alg: &'a FiniteBooleanAlgebra, pairs: &[(u32, u32)], symmetric: bool) -> Result<Self> {
        let mut r = Self::empty(alg)?;
        for &(x, y) in pairs {
            if x > alg.top_mask() || y > alg.top_mask() {
                return Err(Error::BadElement(format!("pair ({x}, {y})")));
            }
            r.insert(x, y);
            if symmetric {
                r.insert(y, x);
            }
        }
        Ok(r)
    }

    pub fn insert(&mut self, x: u32, y: u32) {
        self.rows[x as usize].insert(y);
    }

    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    pub fn related(&self, x: u32, y: u32) -> bool {
        self.rows.get(x as usize).is_some_and(|r| r.contains(y))
    }

    /// Related pairs `(x, y)` with `x ≤ y` numerically.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        (0..=self.alg.top_mask())
            .flat_map(|x| self.rows[x as usize].iter().filter(move |&y| y >= x).map(move |y| (x, y)))
            .collect()
    }

    /// Every two members (not necessarily distinct) are related.
    pub fn is_clique(&self, f: &ElemSet) -> bool {
        f.iter().all(|x| f.is_subset(&self.rows[x as usize]))
    }
}

impl fmt::Debug for Relation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("{} C {}", self.alg.render(x), self.alg.render(y)))
            .collect();
        f.debug_list().entries(shown).finish()
    }
}

/// A relation satisfying (C0)-(C4).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContactRelation<'a>(Relation<'a>);

impl<'a> std::ops::Deref for ContactRelation<'a> {
    type Target = Relation<'a>;

    fn deref(&self) -> &Relation<'a> {
        &self.0
    }
}

impl<'a> ContactRelation<'a> {
    pub fn relation(&self) -> &Relation<'a> {
        &self.0
    }
}

fn pair_witness(alg: &FiniteBooleanAlgebra, v: Violation, roles: &[(&str, u32)]) -> Violation {
    roles
        .iter()
        .fold(v, |v, &(role, x)| v.with(role, WitnessValue::Element(alg.names_of(x))))
}

pub fn check_contact<'a>(r: &Relation<'a>) -> Result<ContactRelation<'a>> {
    let alg = r.alg;
    let top = alg.top_mask();
    let elems = 0..=top;
    for x in elems.clone() {
        if r.related(0, x) || r.related(x, 0) {
            let (p, q) = if r.related(0, x) { (0, x) } else { (x, 0) };
            let v = Violation::new(Axiom::C0, "zero is in contact with something");
            return Err(pair_witness(alg, v, &[("x", p), ("y", q)]).into());
        }
    }
    for x in 1..=top {
        if !r.related(x, x) {
            let v = Violation::new(Axiom::C1, "a nonzero element is not in contact with itself");
            return Err(pair_witness(alg, v, &[("x", x)]).into());
        }
    }
    for x in elems.clone() {
        for y in r.rows[x as usize].iter() {
            if !r.related(y, x) {
                let v = Violation::new(Axiom::C2, "the relation is not symmetric");
                return Err(pair_witness(alg, v, &[("x", x), ("y", y)]).into());
            }
        }
    }
    for x in elems.clone() {
        for y in r.rows[x as usize].iter() {
            for z in elems.clone().filter(|&z| y & !z == 0) {
                if !r.related(x, z) {
                    let v = Violation::new(Axiom::C3, "contact is not preserved upwards");
                    return Err(pair_witness(alg, v, &[("x", x), ("y", y), ("z", z)]).into());
                }
            }
        }
    }
    for x in elems.clone() {
        for y in elems.clone() {
            for z in elems.clone() {
                if r.related(x, y | z) && !r.related(x, y) && !r.related(x, z) {
                    let v = Violation::new(Axiom::C4, "contact with a join does not split");
                    return Err(pair_witness(alg, v, &[("x", x), ("y", y), ("z", z)]).into());
                }
            }
        }
    }
    Ok(ContactRelation(r.clone()))
}

/// `x · y ≠ 0`, the smallest contact.
pub fn overlap(alg: &FiniteBooleanAlgebra) -> Result<ContactRelation<'_>> {
    Ok(ContactRelation(Relation::from_fn(alg, |x, y| x & y != 0)?))
}

/// All pairs of nonzero elements, the largest contact.
pub fn full_contact(alg: &FiniteBooleanAlgebra) -> Result<ContactRelation<'_>> {
    Ok(ContactRelation(Relation::from_fn(alg, |x, y| x != 0 && y != 0)?))
}

/// `x C y` iff `{x, y} ∈ K`.
pub fn derive_contact<'a>(k: &Ultracontact<'a>) -> Result<ContactRelation<'a>> {
    let alg = k.algebra();
    let n = alg.n_atoms();
    let r = Relation::from_fn(alg, |x, y| k.contains(&Family::from_set(alg, ElemSet::from_masks(n, [x, y]))))?;
    Ok(ContactRelation(r))
}

fn atom_masks(alg: &FiniteBooleanAlgebra) -> impl Iterator<Item = u32> {
    (0..alg.n_atoms()).map(|i| 1u32 << i)
}

/// The ultracontact whose faces are the atoms and the related atom pairs.
pub fn smallest_uc_for<'a>(c: &ContactRelation<'a>) -> Ultracontact<'a> {
    let alg = c.alg;
    let faces = (1..=alg.top_mask()).filter(|&h| match h.count_ones() {
        1 => true,
        2 => c.related(h & h.wrapping_neg(), h & (h - 1)),
        _ => false,
    });
    Ultracontact::from_faces(alg, ElemSet::from_masks(alg.n_atoms(), faces))
}

/// The ultracontact whose faces are the atom sets that are pairwise related.
pub fn largest_uc_for<'a>(c: &ContactRelation<'a>) -> Ultracontact<'a> {
    let alg = c.alg;
    let faces = (1..=alg.top_mask()).filter(|&h| {
        atom_masks(alg)
            .filter(|a| h & a != 0)
            .all(|a| atom_masks(alg).filter(|b| h & b != 0).all(|b| c.related(a, b)))
    });
    Ultracontact::from_faces(alg, ElemSet::from_masks(alg.n_atoms(), faces))
}

/// `{p, q} + {r, s}` is a clique although neither summand is.
#[derive(Debug, Clone, Serialize)]
pub struct K4Witness {
    pub p: Vec<String>,
    pub q: Vec<String>,
    pub r: Vec<String>,
    pub s: Vec<String>,
    pub sum: Vec<Vec<String>>,
    pub sum_is_clique: bool,
    pub left_is_clique: bool,
    pub right_is_clique: bool,
}

/// Checks one quadruple: pairwise distinct and nonzero, `p C r`, `p C s`,
/// `p` not in contact with `q`, `r` not in contact with `s`.
pub fn k4_quadruple(c: &ContactRelation<'_>, p: u32, q: u32, r: u32, s: u32) -> Option<K4Witness> {
    let distinct = p != q && p != r && p != s && q != r && q != s && r != s;
    let nonzero = p != 0 && q != 0 && r != 0 && s != 0;
    if !(distinct && nonzero && c.related(p, r) && c.related(p, s) && !c.related(p, q) && !c.related(r, s)) {
        return None;
    }
    let alg = c.alg;
    let n = alg.n_atoms();
    let left = ElemSet::from_masks(n, [p, q]);
    let right = ElemSet::from_masks(n, [r, s]);
    let sum = crate::families::sum_sets(&left, &right);
    Some(K4Witness {
        p: alg.names_of(p),
        q: alg.names_of(q),
        r: alg.names_of(r),
        s: alg.names_of(s),
        sum: sum.iter().map(|x| alg.names_of(x)).collect(),
        sum_is_clique: c.is_clique(&sum),
        left_is_clique: c.is_clique(&left),
        right_is_clique: c.is_clique(&right),
    })
}

/// First quadruple in lexicographic mask order showing that cliques of `C`
/// do not split over sums.
pub fn k4_violation_witness(c: &ContactRelation<'_>) -> Option<K4Witness> {
    let top = c.alg.top_mask();
    for p in 1..=top {
        for q in (1..=top).filter(|&q| q != p && !c.related(p, q)) {
            for r in (1..=top).filter(|&r| r != p && r != q && c.related(p, r)) {
                for s in 1..=top {
                    if let Some(w) = k4_quadruple(c, p, q, r, s) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// A set of finite families satisfying (H1)-(H5).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypercontact<'a>(FamilySystem<'a>);

impl<'a> Hypercontact<'a> {
    pub fn members(&self) -> &FamilySystem<'a> {
        &self.0
    }

    pub fn contains(&self, f: &Family<'_>) -> bool {
        self.0.contains(f)
    }
}

/// The members of `K` together with the empty family.
pub fn derive_hypercontact<'a>(k: &Ultracontact<'a>) -> Result<Hypercontact<'a>> {
    let mut sys = k.to_explicit()?.into_inner();
    sys.insert_code(0);
    Ok(Hypercontact(sys))
}

pub fn check_hypercontact<'a>(sys: &FamilySystem<'a>) -> Result<Hypercontact<'a>> {
    let alg = sys.algebra();
    let n = alg.n_atoms();
    let fam = |c: u64| Family::from_set(alg, ElemSet::from_code(n, c)).witness();
    let el = |x: u32| WitnessValue::Element(alg.names_of(x));
    if let Some(c) = sys.codes().find(|&c| c & 1 == 1) {
        return Err(Violation::new(Axiom::H1, "a member contains 0").with("member", fam(c)).into());
    }
    if let Some(x) = (1..=alg.top_mask()).find(|&x| !sys.contains_code(1 << x)) {
        return Err(Violation::new(Axiom::H2, "a nonzero singleton is missing").with("element", el(x)).into());
    }
    for d in sys.codes() {
        for z in ElemSet::from_code(n, d).iter() {
            let sub = d & !(1u64 << z);
            if !sys.contains_code(sub) {
                return Err(Violation::new(Axiom::H3, "a subfamily of a member is missing")
                    .with("member", fam(d))
                    .with("subfamily", fam(sub))
                    .into());
            }
        }
    }
    for d in sys.codes() {
        for x in ElemSet::from_code(n, d).iter() {
            for y in (x..=alg.top_mask()).filter(|&y| x & !y == 0) {
                if !sys.contains_code(d | 1 << y) {
                    return Err(Violation::new(Axiom::H4, "adding an element above a member's element leaves")
                        .with("member", fam(d))
                        .with("x", el(x))
                        .with("y", el(y))
                        .into());
                }
            }
        }
    }
    // F ∪ {x + y} = D forces F ∈ {D, D \ {x + y}}
    for d in sys.codes() {
        for z in ElemSet::from_code(n, d).iter() {
            for f in [d, d & !(1u64 << z)] {
                let mut x = z;
                loop {
                    let rest = z & !x;
                    let mut extra = x;
                    loop {
                        let y = rest | extra;
                        if !sys.contains_code(f | 1 << x) && !sys.contains_code(f | 1 << y) {
                            return Err(Violation::new(Axiom::H5, "a member does not split over a join")
                                .with("F", fam(f))
                                .with("x", el(x))
                                .with("y", el(y))
                                .into());
                        }
                        if extra == 0 {
                            break;
                        }
                        extra = (extra - 1) & x;
                    }
                    if x == 0 {
                        break;
                    }
                    x = (x - 1) & z;
                }
            }
        }
    }
    Ok(Hypercontact(sys.clone()))
}
