//! Stack systems: sets of stacks satisfying (SS0)-(SS4), and the mutually
//! inverse passages `K ↦ S_K = {↑F | F ∈ K}` and `S ↦ K_S = {F | ↑F ∈ S}`.

use std::collections::BTreeSet;
use std::fmt;

use crate::boolalg::FiniteBooleanAlgebra;
use crate::elemset::ElemSet;
use crate::error::{Axiom, Result, Violation, WitnessValue};
use crate::families::{all_stack_codes, Family, Stack};
use crate::limits::{self, STACK_ENUM_CEILING};
use crate::uca::{ExplicitUC, FamilySystem};

#[derive(Clone, PartialEq, Eq)]
pub struct StackSystem<'a> {
    alg: &'a FiniteBooleanAlgebra,
    members: BTreeSet<ElemSet>,
}

impl<'a> StackSystem<'a> {
    pub(crate) fn trusted(alg: &'a FiniteBooleanAlgebra, members: BTreeSet<ElemSet>) -> Self {
        Self { alg, members }
    }

    pub fn algebra(&self) -> &'a FiniteBooleanAlgebra {
        self.alg
    }

    pub fn members(&self) -> impl Iterator<Item = Stack<'a>> + '_ {
        self.members
            .iter()
            .map(|s| Stack::generated_by(self.alg, s.minimal().iter()))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub(crate) fn contains_set(&self, s: &ElemSet) -> bool {
        self.members.contains(s)
    }

    pub fn contains(&self, s: &Stack<'_>) -> bool {
        self.alg.same_as(s.algebra()) && self.members.contains(s.set())
    }

    pub fn is_subset(&self, other: &StackSystem<'_>) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl fmt::Debug for StackSystem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members().map(|s| s.to_string())).finish()
    }
}

fn stack_witness(alg: &FiniteBooleanAlgebra, s: &ElemSet) -> WitnessValue {
    Family::from_set(alg, s.minimal()).witness()
}

fn check_codes(alg: &FiniteBooleanAlgebra, members: &BTreeSet<u64>) -> std::result::Result<(), Violation> {
    let n = alg.n_atoms();
    let full = ElemSet::full(n).code().unwrap();
    if members.contains(&0) {
        return Err(Violation::new(Axiom::SS0, "the empty stack is a member"));
    }
    if members.contains(&full) {
        return Err(Violation::new(Axiom::SS1, "B itself is a member"));
    }
    for x in 1..=alg.top_mask() {
        let up = ElemSet::from_masks(n, [x]).up_closure();
        if !members.contains(&up.code().unwrap()) {
            return Err(Violation::new(Axiom::SS2, "a principal stack of a nonzero element is missing")
                .with("element", WitnessValue::Element(alg.names_of(x))));
        }
    }
    // every nonempty substack of V is reached by removing minimal elements
    // one at a time
    for &v in members {
        let vs = ElemSet::from_code(n, v);
        for m in vs.minimal().iter() {
            let u = v & !(1u64 << m);
            if u != 0 && !members.contains(&u) {
                return Err(Violation::new(Axiom::SS3, "a nonempty substack of a member is missing")
                    .with("substack", stack_witness(alg, &ElemSet::from_code(n, u)))
                    .with("member", stack_witness(alg, &vs)));
            }
        }
    }
    let outside: Vec<u64> = all_stack_codes(n)
        .expect("capped above")
        .iter()
        .copied()
        .filter(|&u| u != 0 && !members.contains(&u))
        .collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i..] {
            if u & v != 0 && members.contains(&(u & v)) {
                return Err(Violation::new(Axiom::SS4, "an intersection is a member but neither stack is")
                    .with("left", stack_witness(alg, &ElemSet::from_code(n, u)))
                    .with("right", stack_witness(alg, &ElemSet::from_code(n, v))));
            }
        }
    }
    Ok(())
}

/// Validates (SS0)-(SS4) by quantifying over all stacks of `B`.
pub fn check_ss<'a>(
    alg: &'a FiniteBooleanAlgebra,
    stacks: impl IntoIterator<Item = Stack<'a>>,
) -> Result<StackSystem<'a>> {
    limits::ensure("stack system checking", alg.n_atoms(), STACK_ENUM_CEILING)?;
    let mut members = BTreeSet::new();
    for s in stacks {
        alg.ensure_same(s.algebra())?;
        members.insert(s.into_set());
    }
    let codes: BTreeSet<u64> = members.iter().map(|s| s.code().unwrap()).collect();
    check_codes(alg, &codes)?;
    Ok(StackSystem::trusted(alg, members))
}

/// `{↑F | F ∈ K}`
pub fn sk_of<'a>(k: &ExplicitUC<'a>) -> StackSystem<'a> {
    let sys = k.members();
    let alg = sys.algebra();
    let members = sys.families().map(|f| f.set().up_closure()).collect();
    StackSystem::trusted(alg, members)
}

/// `{F | ↑F ∈ S}`
pub fn ks_of<'a>(s: &StackSystem<'a>) -> Result<ExplicitUC<'a>> {
    let alg = s.alg;
    let mut sys = FamilySystem::new(alg)?;
    let n = alg.n_atoms();
    let n_families = 1u64 << alg.carrier_size();
    for c in 1..n_families {
        if s.members.contains(&ElemSet::from_code(n, c).up_closure()) {
            sys.insert_code(c);
        }
    }
    Ok(ExplicitUC::trusted(sys))
}

/// Nonempty stacks inside some `↑x`, `x ≠ 0`: those with a nonzero meet.
pub fn smin(alg: &FiniteBooleanAlgebra) -> Result<StackSystem<'_>> {
    limits::ensure("stack systems", alg.n_atoms(), STACK_ENUM_CEILING)?;
    let n = alg.n_atoms();
    let members = all_stack_codes(n)?
        .iter()
        .map(|&c| ElemSet::from_code(n, c))
        .filter(|s| !s.is_empty() && s.meet_all() != 0)
        .collect();
    Ok(StackSystem::trusted(alg, members))
}

/// Every stack except `∅` and `B`. `B` is a stack but (SS1) excludes it.
pub fn smax(alg: &FiniteBooleanAlgebra) -> Result<StackSystem<'_>> {
    limits::ensure("stack systems", alg.n_atoms(), STACK_ENUM_CEILING)?;
    let n = alg.n_atoms();
    let members = all_stack_codes(n)?
        .iter()
        .map(|&c| ElemSet::from_code(n, c))
        .filter(|s| !s.is_empty() && !s.contains(0))
        .collect();
    Ok(StackSystem::trusted(alg, members))
}
