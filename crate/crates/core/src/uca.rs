//! Ultracontacts: axiom checking, membership, the lattice operations, and
//! extensions by grills, sets and atoms.
//!
//! On a finite algebra an ultracontact is determined by the atom sets it
//! contains (its faces): `F` is a member iff `F` is nonempty and some face
//! `H` supports it, i.e. every member of `F` meets `H`. That is the stored
//! form. Stack witnesses and explicit member lists are derived from it.

use std::collections::BTreeSet;
use std::fmt;

use crate::boolalg::{Element, FiniteBooleanAlgebra};
use crate::elemset::ElemSet;
use crate::error::{Axiom, Error, Result, Violation, WitnessValue};
use crate::families::{self, all_stack_codes, Family, Stack};
use crate::limits::{self, EXPLICIT_MAX_ATOMS, ORACLE_MAX_ATOMS, WITNESS_MAX_ATOMS};
use crate::stacksys::{self, StackSystem};

/// An arbitrary set of families over an algebra with at most four atoms,
/// stored as a bitset indexed by family code.
#[derive(Clone)]
pub struct FamilySystem<'a> {
    alg: &'a FiniteBooleanAlgebra,
    bits: Vec<u64>,
}

impl<'a> FamilySystem<'a> {
    pub fn new(alg: &'a FiniteBooleanAlgebra) -> Result<Self> {
        limits::ensure("an explicit family system", alg.n_atoms(), EXPLICIT_MAX_ATOMS)?;
        let n_families = 1usize << alg.carrier_size();
        Ok(Self {
            alg,
            bits: vec![0; n_families.div_ceil(64)],
        })
    }

    pub fn from_families<'f>(
        alg: &'a FiniteBooleanAlgebra,
        fs: impl IntoIterator<Item = &'f Family<'f>>,
    ) -> Result<Self> {
        let mut sys = Self::new(alg)?;
        for f in fs {
            sys.insert(f)?;
        }
        Ok(sys)
    }

    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    fn code_of(&self, f: &Family<'_>) -> Result<u64> {
        self.alg.ensure_same(f.algebra())?;
        Ok(f.set().code().expect("explicit systems have at most 4 atoms"))
    }

    pub fn insert(&mut self, f: &Family<'_>) -> Result<bool> {
        let c = self.code_of(f)?;
        Ok(self.insert_code(c))
    }

    pub fn insert_code(&mut self, code: u64) -> bool {
        let (w, b) = ((code >> 6) as usize, code & 63);
        let before = self.bits[w];
        self.bits[w] |= 1 << b;
        before != self.bits[w]
    }

    pub fn contains(&self, f: &Family<'_>) -> bool {
        self.code_of(f).map(|c| self.contains_code(c)).unwrap_or(false)
    }

    pub fn contains_code(&self, code: u64) -> bool {
        let w = (code >> 6) as usize;
        w < self.bits.len() && self.bits[w] >> (code & 63) & 1 == 1
    }

    /// Member codes, ascending.
    pub fn codes(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(((i as u64) << 6) + b)
            })
        })
    }

    pub fn families(&self) -> impl Iterator<Item = Family<'a>> + '_ {
        let n = self.alg.n_atoms();
        self.codes()
            .map(move |c| Family::from_set(self.alg, ElemSet::from_code(n, c)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &FamilySystem<'_>) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &FamilySystem<'_>) -> Result<FamilySystem<'a>> {
        self.alg.ensure_same(other.alg)?;
        Ok(Self {
            alg: self.alg,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        })
    }

    /// Adds every nonempty subfamily of `m`.
    pub fn insert_nonempty_subsets(&mut self, m: &Family<'_>) -> Result<()> {
        let c = self.code_of(m)?;
        let mut sub = c;
        while sub != 0 {
            self.insert_code(sub);
            sub = (sub - 1) & c;
        }
        Ok(())
    }
}

impl PartialEq for FamilySystem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.alg.same_as(other.alg)
    }
}

impl Eq for FamilySystem<'_> {}

impl fmt::Debug for FamilySystem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.families().map(|x| x.to_string())).finish()
    }
}

/// A family system known to satisfy the ultracontact axioms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExplicitUC<'a>(FamilySystem<'a>);

impl<'a> ExplicitUC<'a> {
    pub(crate) fn trusted(sys: FamilySystem<'a>) -> Self {
        Self(sys)
    }

    pub fn members(&self) -> &FamilySystem<'a> {
        &self.0
    }

    pub fn into_inner(self) -> FamilySystem<'a> {
        self.0
    }

    pub fn contains(&self, f: &Family<'_>) -> bool {
        self.0.contains(f)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone)]
pub struct Ultracontact<'a> {
    alg: &'a FiniteBooleanAlgebra,
    faces: ElemSet,
    /// For each maximal face `H`, the elements disjoint from `H`.
    avoid: Vec<ElemSet>,
}

impl<'a> Ultracontact<'a> {
    /// `faces` must be down-closed, omit zero and contain every atom.
    pub(crate) fn from_faces(alg: &'a FiniteBooleanAlgebra, faces: ElemSet) -> Self {
        debug_assert!(!faces.contains(0));
        debug_assert!(faces.without(0).down_closure().without(0) == faces);
        let n = alg.n_atoms();
        let top = alg.top_mask();
        let avoid = faces
            .maximal()
            .iter()
            .map(|h| ElemSet::from_masks(n, [top & !h]).down_closure())
            .collect();
        Self { alg, faces, avoid }
    }

    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    /// Atom sets that are members, as masks.
    pub fn faces(&self) -> &ElemSet {
        &self.faces
    }

    pub fn face_masks(&self) -> Vec<u32> {
        self.faces.iter().collect()
    }

    pub fn maximal_faces(&self) -> Vec<u32> {
        self.faces.maximal().iter().collect()
    }

    pub(crate) fn contains_set(&self, set: &ElemSet) -> bool {
        !set.is_empty() && self.avoid.iter().any(|a| !set.intersects(a))
    }

    pub fn contains(&self, f: &Family<'_>) -> bool {
        self.alg.same_as(f.algebra()) && self.contains_set(f.set())
    }

    pub fn contains_stack(&self, s: &Stack<'_>) -> bool {
        self.alg.same_as(s.algebra()) && self.contains_set(s.set())
    }

    pub(crate) fn contains_code(&self, code: u64) -> bool {
        self.contains_set(&ElemSet::from_code(self.alg.n_atoms(), code))
    }

    pub fn is_subset_of(&self, other: &Ultracontact<'_>) -> bool {
        self.faces.is_subset(&other.faces)
    }

    /// Codes of the witness stacks `↑F`, `F` a member, ascending.
    pub(crate) fn witness_codes(&self) -> Result<Vec<u64>> {
        limits::ensure("listing witness stacks", self.alg.n_atoms(), WITNESS_MAX_ATOMS)?;
        let avoid: Vec<u64> = self.avoid.iter().map(|a| a.code().unwrap()).collect();
        Ok(all_stack_codes(self.alg.n_atoms())?
            .iter()
            .copied()
            .filter(|&c| c != 0 && avoid.iter().any(|&a| c & a == 0))
            .collect())
    }

    /// The stack system `{↑F | F ∈ K}`.
    pub fn witnesses(&self) -> Result<Vec<Stack<'a>>> {
        let n = self.alg.n_atoms();
        Ok(self
            .witness_codes()?
            .into_iter()
            .map(|c| Stack::generated_by(self.alg, ElemSet::from_code(n, c).minimal().iter()))
            .collect())
    }

    pub fn stack_system(&self) -> Result<StackSystem<'a>> {
        let n = self.alg.n_atoms();
        let members = self.witness_codes()?.into_iter().map(|c| ElemSet::from_code(n, c)).collect();
        Ok(StackSystem::trusted(self.alg, members))
    }

    /// `F ∈ K` iff `↑F ∈ S`.
    pub fn from_stack_system(s: &StackSystem<'a>) -> Self {
        let alg = s.algebra();
        let n = alg.n_atoms();
        let faces = ElemSet::from_masks(
            n,
            (1..=alg.top_mask()).filter(|&h| s.contains_set(&families::grill_set(n, h))),
        );
        Self::from_faces(alg, faces)
    }

    /// Builds an ultracontact from its witness stacks, checking the stack
    /// system axioms first.
    pub fn from_witnesses(
        alg: &'a FiniteBooleanAlgebra,
        stacks: impl IntoIterator<Item = Stack<'a>>,
    ) -> Result<Self> {
        let s = stacksys::check_ss(alg, stacks)?;
        Ok(Self::from_stack_system(&s))
    }

    pub fn to_explicit(&self) -> Result<ExplicitUC<'a>> {
        let mut sys = FamilySystem::new(self.alg)?;
        let n_families = 1u64 << self.alg.carrier_size();
        let avoid: Vec<u64> = self.avoid.iter().map(|a| a.code().unwrap()).collect();
        for c in 1..n_families {
            if avoid.iter().any(|&a| c & a == 0) {
                sys.insert_code(c);
            }
        }
        Ok(ExplicitUC(sys))
    }

    /// Adds every nonempty subfamily of the grill generated by `atom_mask`.
    fn with_grill_atoms(&self, atom_mask: u32) -> Self {
        let n = self.alg.n_atoms();
        let extra = ElemSet::from_masks(n, [atom_mask]).down_closure().without(0);
        Self::from_faces(self.alg, self.faces.union(&extra))
    }
}

impl PartialEq for Ultracontact<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces && self.alg.same_as(other.alg)
    }
}

impl Eq for Ultracontact<'_> {}

impl std::hash::Hash for Ultracontact<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.faces.hash(state)
    }
}

impl Ord for Ultracontact<'_> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.faces.cmp(&other.faces)
    }
}

impl PartialOrd for Ultracontact<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ultracontact<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .faces
            .maximal()
            .iter()
            .map(|h| {
                let atoms = self.alg.names_of(h);
                format!("{{{}}}", atoms.join(","))
            })
            .collect();
        write!(f, "UC generated by {}", names.join(" "))
    }
}

impl fmt::Debug for Ultracontact<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ultracontact({self})")
    }
}

fn family_witness(alg: &FiniteBooleanAlgebra, set: &ElemSet) -> WitnessValue {
    Family::from_set(alg, set.clone()).witness()
}

fn element_witness(alg: &FiniteBooleanAlgebra, x: u32) -> WitnessValue {
    WitnessValue::Element(alg.names_of(x))
}

/// Smallest nonempty `G ⊆ up` outside `sys`, by size then lexicographically.
fn first_unsupported(sys: &FamilySystem<'_>, up: &ElemSet) -> Option<ElemSet> {
    let elems: Vec<u32> = up.iter().collect();
    let n = up.n_atoms();
    for k in 1..=elems.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let g = ElemSet::from_masks(n, idx.iter().map(|&i| elems[i]));
            if !sys.contains_code(g.code().unwrap()) {
                return Some(g);
            }
            // next k-combination
            let mut i = k;
            while i > 0 && idx[i - 1] == elems.len() - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Checks (K0)-(K4) on an explicit family system and, if they hold,
/// returns the ultracontact it spells out.
pub fn check_explicit<'a>(sys: &FamilySystem<'a>) -> std::result::Result<Ultracontact<'a>, Violation> {
    let alg = sys.algebra();
    let n = alg.n_atoms();
    if sys.contains_code(0) {
        return Err(Violation::new(Axiom::K0, "the empty family is a member"));
    }
    if let Some(f) = sys.codes().find(|&c| c & 1 == 1) {
        return Err(Violation::new(Axiom::K1, "a member contains 0")
            .with("member", family_witness(alg, &ElemSet::from_code(n, f))));
    }
    if let Some(x) = (1..=alg.top_mask()).find(|&x| !sys.contains_code(1 << x)) {
        return Err(Violation::new(Axiom::K2, "a nonzero singleton is missing")
            .with("element", element_witness(alg, x)));
    }
    for c in sys.codes() {
        let f = ElemSet::from_code(n, c);
        let up = f.up_closure();
        let closed = sys.contains_code(up.code().unwrap())
            && (f.len() == 1 || f.iter().all(|x| sys.contains_code(c & !(1 << x))));
        if !closed {
            let g = first_unsupported(sys, &up).expect("some subfamily of the up-closure is missing");
            return Err(Violation::new(Axiom::K3, "a member supports a nonempty family that is not a member")
                .with("member", family_witness(alg, &f))
                .with("supported", family_witness(alg, &g)));
        }
    }
    // With (K3) in place membership is decided by up-closures, and F + G is
    // similar to ↑F ∩ ↑G, so (K4) reduces to pairs of stacks.
    let outside: Vec<u64> = all_stack_codes(n)
        .expect("at most 4 atoms")
        .iter()
        .copied()
        .filter(|&u| u != 0 && !sys.contains_code(u))
        .collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i..] {
            let meet = u & v;
            if meet != 0 && sys.contains_code(meet) {
                let f = ElemSet::from_code(n, u).minimal();
                let g = ElemSet::from_code(n, v).minimal();
                let sum = families::sum_sets(&f, &g);
                return Err(Violation::new(Axiom::K4, "a sum is a member but neither summand is")
                    .with("left", family_witness(alg, &f))
                    .with("right", family_witness(alg, &g))
                    .with("sum", family_witness(alg, &sum)));
            }
        }
    }
    let faces = ElemSet::from_masks(
        n,
        (1..=alg.top_mask()).filter(|&h| sys.contains_code(atoms_family_code(h))),
    );
    Ok(Ultracontact::from_faces(alg, faces))
}

/// Code of the family `{a | a atom below h}`.
fn atoms_family_code(h: u32) -> u64 {
    (0..32)
        .filter(|i| h >> i & 1 == 1)
        .fold(0u64, |acc, i| acc | 1 << (1u32 << i))
}

pub fn uc_from_explicit<'a>(sys: &FamilySystem<'a>) -> Result<Ultracontact<'a>> {
    Ok(check_explicit(sys)?)
}

pub fn uc_membership(k: &Ultracontact<'_>, f: &Family<'_>) -> bool {
    k.contains(f)
}

/// Families with a nonzero lower bound.
pub fn kmin(alg: &FiniteBooleanAlgebra) -> Ultracontact<'_> {
    let n = alg.n_atoms();
    Ultracontact::from_faces(alg, ElemSet::from_masks(n, (0..n).map(|i| 1u32 << i)))
}

/// Nonempty families omitting zero.
pub fn kmax(alg: &FiniteBooleanAlgebra) -> Ultracontact<'_> {
    Ultracontact::from_faces(alg, ElemSet::full(alg.n_atoms()).without(0))
}

pub fn kmin_contains(f: &Family<'_>) -> bool {
    f.has_nonzero_lower_bound()
}

pub fn kmax_contains(f: &Family<'_>) -> bool {
    !f.is_empty() && !f.contains_zero()
}

fn common_algebra<'a>(ks: &[Ultracontact<'a>], what: &'static str) -> Result<&'a FiniteBooleanAlgebra> {
    let first = ks.first().ok_or(Error::EmptyInput(what))?;
    for k in ks {
        first.alg.ensure_same(k.alg)?;
    }
    Ok(first.alg)
}

/// The join is the union.
pub fn uc_join<'a>(ks: &[Ultracontact<'a>]) -> Result<Ultracontact<'a>> {
    let alg = common_algebra(ks, "uc_join")?;
    let faces = ks.iter().skip(1).fold(ks[0].faces.clone(), |acc, k| acc.union(&k.faces));
    Ok(Ultracontact::from_faces(alg, faces))
}

/// The greatest ultracontact below every input, through the face sets.
pub fn uc_meet<'a>(ks: &[Ultracontact<'a>]) -> Result<Ultracontact<'a>> {
    let alg = common_algebra(ks, "uc_meet")?;
    let faces = ks.iter().skip(1).fold(ks[0].faces.clone(), |acc, k| acc.intersection(&k.faces));
    Ok(Ultracontact::from_faces(alg, faces))
}

/// Meet of a chain under inclusion: the intersection of witness sets.
pub fn chain_meet<'a>(ks: &[Ultracontact<'a>]) -> Result<Ultracontact<'a>> {
    common_algebra(ks, "chain_meet")?;
    for (i, a) in ks.iter().enumerate() {
        for b in &ks[i + 1..] {
            if !a.is_subset_of(b) && !b.is_subset_of(a) {
                return Err(Error::NotAChain(format!("{a} and {b} are incomparable")));
            }
        }
    }
    let smallest = ks.iter().fold(&ks[0], |m, k| if k.is_subset_of(m) { k } else { m });
    Ok(smallest.clone())
}

/// Nonempty stacks outside `⋂ ks` closed under intersection: a family `F`
/// lies in the meet iff none of these fits inside `↑F`.
fn blocking_intersections(ks: &[Ultracontact<'_>], n: usize) -> Result<Vec<u64>> {
    limits::ensure("the meet oracle", n, ORACLE_MAX_ATOMS)?;
    let bad: Vec<u64> = all_stack_codes(n)?
        .iter()
        .copied()
        .filter(|&u| u != 0 && !ks.iter().all(|k| k.contains_code(u)))
        .collect();
    let mut closure: BTreeSet<u64> = bad.iter().copied().collect();
    let mut frontier: Vec<u64> = bad.clone();
    while let Some(u) = frontier.pop() {
        for &v in &bad {
            if closure.insert(u & v) {
                frontier.push(u & v);
            }
        }
    }
    Ok(closure.into_iter().collect())
}

/// The meet computed from its defining condition: `F` is in the meet iff
/// `F ≼ G1 + ... + Gn` forces some `Gi` into every input. Each `Gi` may be
/// replaced by `↑Gi`, and sums of stacks are intersections.
pub fn meet_oracle<'a>(ks: &[Ultracontact<'a>]) -> Result<Ultracontact<'a>> {
    let alg = common_algebra(ks, "meet_oracle")?;
    let n = alg.n_atoms();
    let blocks = blocking_intersections(ks, n)?;
    let members = all_stack_codes(n)?
        .iter()
        .copied()
        .filter(|&u| u != 0 && blocks.iter().all(|&c| c & !u != 0))
        .map(|u| Stack::generated_by(alg, ElemSet::from_code(n, u).minimal().iter()));
    Ultracontact::from_witnesses(alg, members)
}

/// Membership of one family in the meet, by the same condition.
pub fn meet_oracle_contains(ks: &[Ultracontact<'_>], f: &Family<'_>) -> Result<bool> {
    let alg = common_algebra(ks, "meet_oracle_contains")?;
    alg.ensure_same(f.algebra())?;
    let blocks = blocking_intersections(ks, alg.n_atoms())?;
    let up = f.set().up_closure().code().unwrap();
    Ok(!f.is_empty() && blocks.iter().all(|&c| c & !up != 0))
}

/// `K ∪ 2^G_+` for each grill `G`.
pub fn extend_by_grills<'a>(k: &Ultracontact<'a>, gs: &[Family<'_>]) -> Result<Ultracontact<'a>> {
    let mut out = k.clone();
    for g in gs {
        k.alg.ensure_same(g.algebra())?;
        if !g.is_grill() {
            return Err(Error::NotAGrill(g.to_string()));
        }
        out = out.with_grill_atoms(families::grill_atoms(g));
    }
    Ok(out)
}

/// `K ∪ ⇑A` for a set of atoms `A`.
pub fn extend_by_atoms<'a>(k: &Ultracontact<'a>, a: &Family<'_>) -> Result<Ultracontact<'a>> {
    k.alg.ensure_same(a.algebra())?;
    if let Some(x) = a.masks().find(|m| m.count_ones() != 1) {
        return Err(Error::NotAnAtom(k.alg.render(x)));
    }
    let mask = a.set().join_all();
    Ok(if mask == 0 { k.clone() } else { k.with_grill_atoms(mask) })
}

/// `K^M = K ∪ 2^M_+` together with its axiom check.
#[derive(Debug, Clone)]
pub struct Extension<'a> {
    pub candidate: FamilySystem<'a>,
    pub result: std::result::Result<Ultracontact<'a>, Violation>,
}

impl Extension<'_> {
    pub fn is_uc(&self) -> bool {
        self.result.is_ok()
    }
}

pub fn extend_by_set<'a>(k: &Ultracontact<'a>, m: &Family<'_>) -> Result<Extension<'a>> {
    k.alg.ensure_same(m.algebra())?;
    let base = k.to_explicit()?.into_inner();
    if k.contains(m) {
        return Ok(Extension {
            candidate: base,
            result: Ok(k.clone()),
        });
    }
    let mut candidate = base;
    candidate.insert_nonempty_subsets(m)?;
    let result = check_explicit(&candidate);
    Ok(Extension { candidate, result })
}

/// Two ultracontacts that both contain `M` while their meet does not.
#[derive(Debug, Clone)]
pub struct MeetFailure<'a> {
    /// `x + y ∈ M` with `x, y ∉ M`.
    pub x: Element<'a>,
    pub y: Element<'a>,
    /// `Kmin` extended by the grill `B \ ↓x`.
    pub k1: Ultracontact<'a>,
    /// `Kmin` extended by the grill `B \ ↓y`.
    pub k2: Ultracontact<'a>,
}

pub fn witness_meet_failure<'a>(m: &Family<'a>) -> Result<MeetFailure<'a>> {
    let alg = m.algebra();
    if m.is_empty() {
        return Err(Error::Precondition("M is empty".into()));
    }
    if !m.is_stack() {
        return Err(Error::Precondition(format!("M = {m} is not a stack")));
    }
    if m.contains_zero() {
        return Err(Error::Precondition(
            "M contains 0, so it is all of B and no join splits outside it".into(),
        ));
    }
    if m.has_nonzero_lower_bound() {
        return Err(Error::Precondition(format!("M = {m} has nonzero lower bound")));
    }
    if m.is_grill() {
        return Err(Error::Precondition(format!("M = {m} is a grill")));
    }
    let top = alg.top_mask();
    let (x, y) = (0..=top)
        .filter(|&x| !m.contains_mask(x))
        .flat_map(|x| (x..=top).map(move |y| (x, y)))
        .find(|&(x, y)| !m.contains_mask(y) && m.contains_mask(x | y))
        .expect("a stack that is not a grill has a splitting join");
    let base = kmin(alg);
    Ok(MeetFailure {
        x: alg.elem(x),
        y: alg.elem(y),
        k1: base.with_grill_atoms(top & !x),
        k2: base.with_grill_atoms(top & !y),
    })
}
