//! Families of elements: support, similarity, Minkowski sums, the
//! stack/filter/ideal/grill classification, and stack and grill enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::Serialize;

use crate::boolalg::{Element, FiniteBooleanAlgebra};
use crate::elemset::ElemSet;
use crate::error::{Error, Result, WitnessValue};
use crate::limits::{self, GRILL_LIST_MAX_ATOMS, STACK_ENUM_CEILING, STACK_ENUM_DEFAULT};

/// A set of elements of one algebra. The empty family is allowed.
#[derive(Clone)]
pub struct Family<'a> {
    alg: &'a FiniteBooleanAlgebra,
    set: ElemSet,
}

impl<'a> Family<'a> {
    pub fn from_set(alg: &'a FiniteBooleanAlgebra, set: ElemSet) -> Self {
        debug_assert_eq!(set.n_atoms(), alg.n_atoms());
        Self { alg, set }
    }

    pub fn empty(alg: &'a FiniteBooleanAlgebra) -> Self {
        Self::from_set(alg, ElemSet::empty(alg.n_atoms()))
    }

    /// The whole carrier `B`.
    pub fn full(alg: &'a FiniteBooleanAlgebra) -> Self {
        Self::from_set(alg, ElemSet::full(alg.n_atoms()))
    }

    pub fn from_masks(alg: &'a FiniteBooleanAlgebra, masks: impl IntoIterator<Item = u32>) -> Self {
        Self::from_set(alg, ElemSet::from_masks(alg.n_atoms(), masks))
    }

    pub fn from_elements(alg: &'a FiniteBooleanAlgebra, elems: &[Element<'_>]) -> Result<Self> {
        let mut set = ElemSet::empty(alg.n_atoms());
        for e in elems {
            alg.ensure_same(e.algebra())?;
            set.insert(e.mask());
        }
        Ok(Self::from_set(alg, set))
    }

    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn into_set(self) -> ElemSet {
        self.set
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.set.iter()
    }

    pub fn elements(&self) -> Vec<Element<'a>> {
        self.set.iter().map(|m| self.alg.elem(m)).collect()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, x: Element<'_>) -> bool {
        self.alg.same_as(x.algebra()) && self.set.contains(x.mask())
    }

    pub fn contains_mask(&self, x: u32) -> bool {
        self.set.contains(x)
    }

    pub fn contains_zero(&self) -> bool {
        self.set.contains(0)
    }

    pub fn with(&self, x: Element<'_>) -> Self {
        Self::from_set(self.alg, self.set.with(x.mask()))
    }

    pub fn is_subset(&self, other: &Family<'_>) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn union(&self, other: &Family<'_>) -> Result<Family<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(Self::from_set(self.alg, self.set.union(&other.set)))
    }

    pub fn intersection(&self, other: &Family<'_>) -> Result<Family<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(Self::from_set(self.alg, self.set.intersection(&other.set)))
    }

    /// `B \ F`
    pub fn complement(&self) -> Family<'a> {
        Self::from_set(self.alg, self.set.complement())
    }

    pub fn up_closure(&self) -> Stack<'a> {
        Stack::from_up_set(self.alg, self.set.up_closure())
    }

    /// `F ≼ G`: every member of `G` lies above some member of `F`.
    pub fn supports(&self, g: &Family<'_>) -> Result<bool> {
        self.alg.ensure_same(g.alg)?;
        Ok(g.set.is_subset(&self.set.up_closure()))
    }

    pub fn similar(&self, g: &Family<'_>) -> Result<bool> {
        self.alg.ensure_same(g.alg)?;
        Ok(self.set.up_closure() == g.set.up_closure())
    }

    pub fn sum(&self, g: &Family<'_>) -> Result<Family<'a>> {
        self.alg.ensure_same(g.alg)?;
        Ok(Self::from_set(self.alg, sum_sets(&self.set, &g.set)))
    }

    /// Meet of all members; `None` for the empty family.
    pub fn meet_of_members(&self) -> Option<Element<'a>> {
        (!self.is_empty()).then(|| self.alg.elem(self.set.meet_all()))
    }

    pub fn join_of_members(&self) -> Element<'a> {
        self.alg.elem(self.set.join_all())
    }

    /// Some nonzero element lies below every member.
    pub fn has_nonzero_lower_bound(&self) -> bool {
        !self.is_empty() && self.set.meet_all() != 0
    }

    pub fn is_stack(&self) -> bool {
        self.set.is_up_closed()
    }

    pub fn is_grill(&self) -> bool {
        self.classify().is_grill
    }

    pub fn classify(&self) -> Classification {
        classify_set(&self.set)
    }

    pub fn names(&self) -> Vec<Vec<String>> {
        self.set.iter().map(|m| self.alg.names_of(m)).collect()
    }

    pub fn witness(&self) -> WitnessValue {
        WitnessValue::Family(self.names())
    }
}

impl PartialEq for Family<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set && self.alg.same_as(other.alg)
    }
}

impl Eq for Family<'_> {}

impl Hash for Family<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state)
    }
}

impl Ord for Family<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.set.cmp(&other.set)
    }
}

impl PartialOrd for Family<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Family<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.set.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.alg.render(m))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Family<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family{self}")
    }
}

/// `{ a + b | a in x, b in y }`
pub(crate) fn sum_sets(x: &ElemSet, y: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(x.n_atoms());
    for a in x.iter() {
        for b in y.iter() {
            out.insert(a | b);
        }
    }
    out
}

/// Element-wise joins choosing one member from each family.
pub fn minkowski_sum<'a>(fs: &[Family<'a>]) -> Result<Family<'a>> {
    let (first, rest) = fs.split_first().ok_or(Error::EmptyInput("minkowski_sum"))?;
    let mut acc = first.clone();
    for f in rest {
        acc = acc.sum(f)?;
    }
    Ok(acc)
}

pub fn up_closure<'a>(f: &Family<'a>) -> Stack<'a> {
    f.up_closure()
}

pub fn supports(f: &Family<'_>, g: &Family<'_>) -> Result<bool> {
    f.supports(g)
}

pub fn similar(f: &Family<'_>, g: &Family<'_>) -> Result<bool> {
    f.similar(g)
}

/// An up-closed family, kept expanded; its generators are the minimal members.
#[derive(Clone)]
pub struct Stack<'a> {
    alg: &'a FiniteBooleanAlgebra,
    set: ElemSet,
}

/// Canonical representative of a similarity class: the up-closure.
pub type ClassRep<'a> = Stack<'a>;

impl<'a> Stack<'a> {
    pub(crate) fn from_up_set(alg: &'a FiniteBooleanAlgebra, set: ElemSet) -> Self {
        debug_assert!(set.is_up_closed());
        Self { alg, set }
    }

    /// `↑M` for the given generators.
    pub fn generated_by(alg: &'a FiniteBooleanAlgebra, masks: impl IntoIterator<Item = u32>) -> Self {
        Self::from_up_set(alg, ElemSet::from_masks(alg.n_atoms(), masks).up_closure())
    }

    pub fn from_family(f: &Family<'a>) -> Result<Self> {
        if !f.is_stack() {
            return Err(Error::Precondition(format!("{f} is not up-closed")));
        }
        Ok(Self::from_up_set(f.alg, f.set.clone()))
    }

    pub fn empty(alg: &'a FiniteBooleanAlgebra) -> Self {
        Self::from_up_set(alg, ElemSet::empty(alg.n_atoms()))
    }

    pub fn full(alg: &'a FiniteBooleanAlgebra) -> Self {
        Self::from_up_set(alg, ElemSet::full(alg.n_atoms()))
    }

    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn into_set(self) -> ElemSet {
        self.set
    }

    pub fn generator_masks(&self) -> Vec<u32> {
        self.set.minimal().iter().collect()
    }

    pub fn generators(&self) -> Vec<Element<'a>> {
        self.set.minimal().iter().map(|m| self.alg.elem(m)).collect()
    }

    pub fn as_family(&self) -> Family<'a> {
        Family::from_set(self.alg, self.set.clone())
    }

    pub fn generator_family(&self) -> Family<'a> {
        Family::from_set(self.alg, self.set.minimal())
    }

    pub fn contains(&self, x: Element<'_>) -> bool {
        self.alg.same_as(x.algebra()) && self.set.contains(x.mask())
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// The stack is all of `B`, i.e. contains zero.
    pub fn is_full(&self) -> bool {
        self.set.contains(0)
    }

    pub fn is_subset(&self, other: &Stack<'_>) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn union(&self, other: &Stack<'_>) -> Result<Stack<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(Self::from_up_set(self.alg, self.set.union(&other.set)))
    }

    pub fn intersection(&self, other: &Stack<'_>) -> Result<Stack<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(Self::from_up_set(self.alg, self.set.intersection(&other.set)))
    }

    pub fn witness(&self) -> WitnessValue {
        self.generator_family().witness()
    }
}

impl PartialEq for Stack<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set && self.alg.same_as(other.alg)
    }
}

impl Eq for Stack<'_> {}

impl Hash for Stack<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state)
    }
}

impl Ord for Stack<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.set.cmp(&other.set)
    }
}

impl PartialOrd for Stack<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Stack<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "↑{}", self.generator_family())
    }
}

impl fmt::Debug for Stack<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Stack({self})")
    }
}

/// `[F] ∨ [G]`, represented by `↑(F+G) = ↑F ∩ ↑G`.
pub fn class_join<'a>(f: &Family<'a>, g: &Family<'_>) -> Result<ClassRep<'a>> {
    f.alg.ensure_same(g.alg)?;
    Ok(Stack::from_up_set(f.alg, f.set.up_closure().intersection(&g.set.up_closure())))
}

/// `[F] ∧ [G]`, represented by `↑(F ∪ G)`.
pub fn class_meet<'a>(f: &Family<'a>, g: &Family<'_>) -> Result<ClassRep<'a>> {
    f.alg.ensure_same(g.alg)?;
    Ok(Stack::from_up_set(f.alg, f.set.union(&g.set).up_closure()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_stack: bool,
    pub is_filter: bool,
    pub is_proper_filter: bool,
    pub is_ultrafilter: bool,
    pub is_ideal: bool,
    pub is_proper_ideal: bool,
    pub is_grill: bool,
}

pub fn classify(f: &Family<'_>) -> Classification {
    f.classify()
}

fn closed_under(set: &ElemSet, op: impl Fn(u32, u32) -> u32) -> bool {
    let members: Vec<u32> = set.iter().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(op(a, b))))
}

/// `a + b ∈ G ⇒ a ∈ G or b ∈ G`
pub(crate) fn splits_over_joins(set: &ElemSet) -> bool {
    set.iter().all(|z| {
        // a ranges over submasks of z, b over masks with a | b = z
        subsets(z).all(|a| set.contains(a) || subsets(a).all(|e| set.contains((z & !a) | e)))
    })
}

/// All submasks of `m`, from `m` down to zero.
pub(crate) fn subsets(m: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & m);
        Some(cur)
    })
}

fn classify_set(set: &ElemSet) -> Classification {
    let n = set.n_atoms();
    let top = (1u32 << n) - 1;
    let is_stack = set.is_up_closed();
    let is_down = set.down_closure() == *set;
    let is_filter = set.contains(top) && is_stack && closed_under(set, |a, b| a & b);
    let is_proper_filter = is_filter && !set.contains(0);
    // maximal among proper filters: adding any outsider forces zero
    let is_ultrafilter = is_proper_filter && {
        let m = set.meet_all();
        (0..=top).all(|x| set.contains(x) || m & x == 0)
    };
    let is_ideal = set.contains(0) && is_down && closed_under(set, |a, b| a | b);
    let is_proper_ideal = is_ideal && !set.contains(top);
    let is_grill = !set.is_empty() && !set.contains(0) && is_stack && splits_over_joins(set);
    Classification {
        is_stack,
        is_filter,
        is_proper_filter,
        is_ultrafilter,
        is_ideal,
        is_proper_ideal,
        is_grill,
    }
}

/// Smallest ideal containing `M`: everything below the join of `M`.
pub fn generate_ideal<'a>(m: &Family<'a>) -> Family<'a> {
    let j = m.set.join_all();
    Family::from_set(m.alg, ElemSet::from_masks(m.alg.n_atoms(), [j]).down_closure())
}

fn stack_codes(n: usize) -> Vec<u64> {
    fn rec(n: usize, m: i64, cur: u64, out: &mut Vec<u64>) {
        if m < 0 {
            out.push(cur);
            return;
        }
        let mu = m as u32;
        rec(n, m - 1, cur, out);
        let covered = (0..n)
            .filter(|i| mu >> i & 1 == 0)
            .all(|i| cur >> (mu | 1 << i) & 1 == 1);
        if covered {
            rec(n, m - 1, cur | 1 << mu, out);
        }
    }
    let mut out = Vec::new();
    rec(n, (1i64 << n) - 1, 0, &mut out);
    out.sort_unstable();
    out
}

/// Codes of every up-closed subset of the `n`-atom carrier, ascending.
pub(crate) fn all_stack_codes(n: usize) -> Result<&'static [u64]> {
    static CACHE: [OnceLock<Vec<u64>>; STACK_ENUM_CEILING + 1] =
        [const { OnceLock::new() }; STACK_ENUM_CEILING + 1];
    limits::ensure("stack enumeration", n, STACK_ENUM_CEILING)?;
    Ok(CACHE[n].get_or_init(|| stack_codes(n)))
}

/// All stacks of `B`, including `∅` and `B`, for at most four atoms.
pub fn enumerate_stacks(alg: &FiniteBooleanAlgebra) -> Result<Vec<Stack<'_>>> {
    enumerate_stacks_up_to(alg, STACK_ENUM_DEFAULT)
}

/// As [`enumerate_stacks`] with a caller-chosen cap (at most five atoms).
pub fn enumerate_stacks_up_to(alg: &FiniteBooleanAlgebra, cap: usize) -> Result<Vec<Stack<'_>>> {
    limits::ensure("stack enumeration", alg.n_atoms(), cap.min(STACK_ENUM_CEILING))?;
    let n = alg.n_atoms();
    Ok(all_stack_codes(n)?
        .iter()
        .map(|&c| Stack::from_up_set(alg, ElemSet::from_code(n, c)))
        .collect())
}

/// `{ x | x meets A }` for an atom mask `A`: the union of `↑a`, `a` in `A`.
pub(crate) fn grill_set(n: usize, atom_mask: u32) -> ElemSet {
    let top = (1u32 << n) - 1;
    ElemSet::from_masks(n, [top & !atom_mask]).down_closure().complement()
}

pub fn grill_of_atoms(alg: &FiniteBooleanAlgebra, atom_mask: u32) -> Result<Family<'_>> {
    if atom_mask == 0 || atom_mask > alg.top_mask() {
        return Err(Error::Precondition(format!(
            "grills are generated by a nonempty atom set, got mask {atom_mask:#b}"
        )));
    }
    Ok(Family::from_set(alg, grill_set(alg.n_atoms(), atom_mask)))
}

/// The atoms whose principal ultrafilters make up a grill.
pub fn grill_atoms(g: &Family<'_>) -> u32 {
    (0..g.alg.n_atoms())
        .map(|i| 1u32 << i)
        .filter(|&a| g.set.contains(a))
        .fold(0, |acc, a| acc | a)
}

/// One grill per nonempty atom set.
pub fn count_grills(alg: &FiniteBooleanAlgebra) -> u64 {
    (1u64 << alg.n_atoms()) - 1
}

pub fn enumerate_grills(alg: &FiniteBooleanAlgebra) -> Result<Vec<Family<'_>>> {
    enumerate_grills_up_to(alg, GRILL_LIST_MAX_ATOMS)
}

/// Grills ordered by their atom set.
pub fn enumerate_grills_up_to(alg: &FiniteBooleanAlgebra, cap: usize) -> Result<Vec<Family<'_>>> {
    limits::ensure("grill listing", alg.n_atoms(), cap)?;
    Ok((1..=alg.top_mask())
        .map(|a| Family::from_set(alg, grill_set(alg.n_atoms(), a)))
        .collect())
}

/// Greatest grill below every input, or `None` when no ultrafilter fits
/// inside their intersection.
pub fn grill_partial_meet<'a>(gs: &[Family<'a>]) -> Result<Option<Family<'a>>> {
    let first = gs.first().ok_or(Error::EmptyInput("grill_partial_meet"))?;
    let alg = first.alg;
    let mut common = ElemSet::full(alg.n_atoms());
    for g in gs {
        alg.ensure_same(g.alg)?;
        if !g.is_grill() {
            return Err(Error::NotAGrill(g.to_string()));
        }
        common = common.intersection(&g.set);
    }
    let atoms = grill_atoms(&Family::from_set(alg, common));
    Ok((atoms != 0).then(|| Family::from_set(alg, grill_set(alg.n_atoms(), atoms))))
}
