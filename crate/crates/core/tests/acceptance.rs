//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Oracles here are written from the definitions and only share the
//! algebra type with the library: families are bit codes over the carrier
//! and every check is a direct quantification.

use std::time::{Duration, Instant};

use uclab_core::contact::{
    check_hypercontact, derive_contact, derive_hypercontact, full_contact, k4_quadruple, k4_violation_witness,
    largest_uc_for, overlap, smallest_uc_for,
};
use uclab_core::simplicial::{enumerate_ucs, sigma, sigma_inverse};
use uclab_core::stacksys::{check_ss, ks_of, sk_of};
use uclab_core::topology::{enumerate_topologies, intersection_uc, make_space, rc_algebra};
use uclab_core::uca::{
    extend_by_atoms, extend_by_set, kmax, kmin, meet_oracle, meet_oracle_contains, uc_from_explicit, uc_join,
    uc_meet, witness_meet_failure, FamilySystem,
};
use uclab_core::{Axiom, Family, FiniteBooleanAlgebra, Ultracontact};

struct Outcome {
    ok: bool,
    lines: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            ok: true,
            lines: Vec::new(),
        }
    }

    fn require(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.lines.push(format!("failed: {}", what.into()));
        }
    }

    fn info(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

fn alg(n: usize) -> FiniteBooleanAlgebra {
    FiniteBooleanAlgebra::with_atoms(n).unwrap()
}

// ---- families as bit codes over the carrier ----

fn elems(code: u64) -> impl Iterator<Item = u32> {
    (0..64u32).filter(move |i| code >> i & 1 == 1)
}

fn leq(x: u32, y: u32) -> bool {
    x & !y == 0
}

fn sum(f: u64, g: u64) -> u64 {
    let mut out = 0;
    for x in elems(f) {
        for y in elems(g) {
            out |= 1u64 << (x | y);
        }
    }
    out
}

fn supports(f: u64, g: u64) -> bool {
    elems(g).all(|y| elems(f).any(|x| leq(x, y)))
}

fn is_up_closed(f: u64, size: u32) -> bool {
    elems(f).all(|x| (0..size).all(|y| !leq(x, y) || f >> y & 1 == 1))
}

fn up(f: u64, size: u32) -> u64 {
    (0..size).filter(|&y| elems(f).any(|x| leq(x, y))).fold(0, |a, y| a | 1 << y)
}

fn stacks(size: u32) -> Vec<u64> {
    (0..1u64 << size).filter(|&f| is_up_closed(f, size)).collect()
}

/// A set of families as a bitset indexed by family code.
#[derive(Clone, PartialEq, Eq)]
struct Members(Vec<u64>);

impl Members {
    fn empty(size: u32) -> Self {
        Members(vec![0; ((1usize << size) + 63) / 64])
    }

    fn has(&self, f: u64) -> bool {
        self.0[(f / 64) as usize] >> (f % 64) & 1 == 1
    }

    fn add(&mut self, f: u64) {
        self.0[(f / 64) as usize] |= 1 << (f % 64);
    }

    fn subset(&self, o: &Members) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    fn union(&self, o: &Members) -> Members {
        Members(self.0.iter().zip(&o.0).map(|(a, b)| a | b).collect())
    }
}

fn members_of(k: &Ultracontact<'_>) -> Members {
    let size = k.algebra().carrier_size() as u32;
    let mut m = Members::empty(size);
    for c in k.to_explicit().unwrap().members().codes() {
        m.add(c);
    }
    m
}

fn family<'a>(b: &'a FiniteBooleanAlgebra, code: u64) -> Family<'a> {
    Family::from_masks(b, elems(code))
}

/// Axioms of an ultracontact quantified verbatim. Returns the first
/// failing axiom.
fn uc_axioms(m: &Members, size: u32) -> Result<(), String> {
    let all = 1u64 << size;
    if m.has(0) {
        return Err("K0".into());
    }
    if (1..all).any(|f| m.has(f) && f & 1 == 1) {
        return Err("K1".into());
    }
    if (1..size).any(|x| !m.has(1 << x)) {
        return Err("K2".into());
    }
    for f in (1..all).filter(|&f| m.has(f)) {
        let u = up(f, size);
        // nonempty G with F ≼ G are the nonempty subsets of ↑F
        let mut g = u;
        while g != 0 {
            if !m.has(g) {
                return Err(format!("K3 at F={f:#b}, G={g:#b}"));
            }
            g = (g - 1) & u;
        }
    }
    for f in 1..all {
        for g in f..all {
            if m.has(sum(f, g)) && !m.has(f) && !m.has(g) {
                return Err(format!("K4 at F={f:#b}, G={g:#b}"));
            }
        }
    }
    Ok(())
}

/// Stack system axioms over the given list of stack codes.
fn ss_axioms(sys: &[u64], all_stacks: &[u64], size: u32) -> bool {
    let has = |u: u64| sys.contains(&u);
    let full = (1u64 << size) - 1;
    if has(0) || has(full) {
        return false;
    }
    if !(1..size).all(|x| has(up(1 << x, size))) {
        return false;
    }
    for &v in sys {
        for &u in all_stacks {
            if u != 0 && u & !v == 0 && !has(u) {
                return false;
            }
        }
    }
    for &u in all_stacks {
        for &v in all_stacks {
            if has(u & v) && !has(u) && !has(v) {
                return false;
            }
        }
    }
    true
}

// ---- criteria ----

fn c1() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let ucs = enumerate_ucs(&b).unwrap();
    o.require(ucs.len() == 9, format!("enumerate_ucs gave {}", ucs.len()));
    let st = stacks(8);
    o.require(st.len() == 20, "twenty stacks on three atoms");
    // SS0 and SS1 exclude ∅ and B, SS2 forces the seven principal stacks;
    // walk every subset of the twenty stacks anyway
    let mut found: Vec<Vec<u64>> = Vec::new();
    for choice in 0u32..1 << st.len() {
        if choice & 1 == 1 {
            continue;
        }
        let sys: Vec<u64> = (0..st.len()).filter(|i| choice >> i & 1 == 1).map(|i| st[i]).collect();
        if ss_axioms(&sys, &st, 8) {
            found.push(sys);
        }
    }
    o.info(format!("oracle found {} stack systems among 2^20 subsets", found.len()));
    o.require(found.len() == 9, "oracle count");
    let mut from_lib: Vec<Vec<u64>> = ucs
        .iter()
        .map(|k| st.iter().copied().filter(|&u| u != 0 && k.contains(&family(&b, u))).collect())
        .collect();
    from_lib.sort();
    found.sort();
    o.require(from_lib == found, "enumerated UCs give exactly the oracle's stack systems");
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=4 {
        let b = alg(n);
        let ucs = enumerate_ucs(&b).unwrap();
        let ms: Vec<Members> = ucs.iter().map(members_of).collect();
        for (i, k) in ucs.iter().enumerate() {
            o.require(sigma_inverse(&b, &sigma(k)).unwrap() == *k, "round trip");
            for (j, k2) in ucs.iter().enumerate() {
                let by_members = ms[i].subset(&ms[j]);
                let by_faces = sigma(k).is_subcomplex(&sigma(k2));
                o.require(by_members == by_faces, format!("inclusion on {n} atoms"));
            }
        }
        o.info(format!("{} UCs on {n} atoms", ucs.len()));
    }
    o
}

fn contact_axioms(r: &dyn Fn(u32, u32) -> bool, size: u32) -> bool {
    let all: Vec<u32> = (0..size).collect();
    all.iter().all(|&x| !r(0, x) && !r(x, 0))
        && all.iter().all(|&x| x == 0 || r(x, x))
        && all.iter().all(|&x| all.iter().all(|&y| r(x, y) == r(y, x)))
        && all.iter().all(|&x| all.iter().all(|&y| all.iter().all(|&z| !(r(x, y) && leq(y, z)) || r(x, z))))
        && all
            .iter()
            .all(|&x| all.iter().all(|&y| all.iter().all(|&z| !r(x, y | z) || r(x, y) || r(x, z))))
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let st = stacks(8);
    for k in enumerate_ucs(&b).unwrap() {
        let m = members_of(&k);
        if let Err(e) = uc_axioms(&m, 8) {
            o.require(false, format!("{k}: {e}"));
        }
        let explicit = k.to_explicit().unwrap();
        o.require(uc_from_explicit(explicit.members()).unwrap() == k, "library checker agrees");
        let c = derive_contact(&k).unwrap();
        let pair_in = |x: u32, y: u32| m.has(1 << x | 1 << y);
        o.require((0..8).all(|x| (0..8).all(|y| c.related(x, y) == pair_in(x, y))), "contact is pairs in K");
        o.require(contact_axioms(&|x, y| c.related(x, y), 8), format!("{k}: contact axioms"));
        let h = derive_hypercontact(&k).unwrap();
        o.require(check_hypercontact(h.members()).is_ok(), format!("{k}: hypercontact axioms"));
        o.require(h.contains(&Family::empty(&b)), "hypercontact contains the empty family");
        let s = sk_of(&explicit);
        let s_codes: Vec<u64> = st.iter().copied().filter(|&u| u != 0 && m.has(u)).collect();
        o.require(ss_axioms(&s_codes, &st, 8), format!("{k}: stack system axioms (oracle)"));
        o.require(check_ss(&b, s.members()).is_ok(), format!("{k}: stack system axioms (library)"));
        o.require(s.len() == s_codes.len(), "S_K has the oracle's size");
        let back = ks_of(&s).unwrap();
        o.require(back == explicit, "K = K_{S_K}");
        o.require(sk_of(&back) == s, "S = S_{K_S}");
    }
    o
}

/// Greatest element of `cands` below every member of `of`.
fn glb(cands: &[Members], of: &[&Members]) -> Option<usize> {
    let lower: Vec<usize> = (0..cands.len()).filter(|&i| of.iter().all(|m| cands[i].subset(m))).collect();
    lower.iter().copied().find(|&i| lower.iter().all(|&j| cands[j].subset(&cands[i])))
}

fn c4() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let ucs = enumerate_ucs(&b).unwrap();
    let ms: Vec<Members> = ucs.iter().map(members_of).collect();
    for i in 0..ucs.len() {
        for j in 0..ucs.len() {
            let pair = [ucs[i].clone(), ucs[j].clone()];
            let union = ms[i].union(&ms[j]);
            let join = members_of(&uc_join(&pair).unwrap());
            o.require(join == union, "join is the union");
            o.require(uc_axioms(&union, 8).is_ok(), "the union is a UC");
            let meet = members_of(&uc_meet(&pair).unwrap());
            let g = glb(&ms, &[&ms[i], &ms[j]]);
            o.require(g.is_some_and(|g| ms[g] == meet), "meet is the greatest lower bound");
        }
    }
    let mut combos = 0;
    for (i, k) in ucs.iter().enumerate() {
        for s in 1u32..1 << ucs.len() {
            combos += 1;
            let chosen: Vec<usize> = (0..ucs.len()).filter(|t| s >> t & 1 == 1).collect();
            let of: Vec<&Members> = chosen.iter().map(|&t| &ms[t]).collect();
            let Some(m) = glb(&ms, &of) else {
                o.require(false, "meet exists");
                continue;
            };
            let left = ms[i].union(&ms[m]);
            let joined: Vec<Members> = chosen.iter().map(|&t| ms[i].union(&ms[t])).collect();
            let right = glb(&ms, &joined.iter().collect::<Vec<_>>());
            o.require(right.is_some_and(|r| ms[r] == left), "K join meet = meet of joins");
            let lib_left = uc_join(&[k.clone(), uc_meet(&chosen.iter().map(|&t| ucs[t].clone()).collect::<Vec<_>>()).unwrap()]).unwrap();
            o.require(members_of(&lib_left) == left, "library agrees");
        }
    }
    o.info(format!("{combos} (K, subset) combinations"));
    o
}

/// `F` is in the meet iff no set of excluded stacks has its intersection
/// inside `↑F`, searched over all subsets.
fn tuple_meet(ms: &[&Members], st: &[u64], size: u32) -> Members {
    let bad: Vec<u64> = st.iter().copied().filter(|&u| u != 0 && !ms.iter().all(|m| m.has(u))).collect();
    let mut out = Members::empty(size);
    for f in 1u64..1 << size {
        let uf = up(f, size);
        let blocked = (1u64..1 << bad.len()).any(|t| {
            let inter = elems(t).fold(u64::MAX, |acc, i| acc & bad[i as usize]);
            inter & !uf == 0
        });
        if !blocked {
            out.add(f);
        }
    }
    out
}

fn c5() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let st = stacks(8);
    let ucs = enumerate_ucs(&b).unwrap();
    let ms: Vec<Members> = ucs.iter().map(members_of).collect();
    let mut pairs = 0;
    for i in 0..ucs.len() {
        for j in i + 1..ucs.len() {
            pairs += 1;
            let pair = [ucs[i].clone(), ucs[j].clone()];
            let oracle = meet_oracle(&pair).unwrap();
            let lib = uc_meet(&pair).unwrap();
            o.require(oracle == lib, "meet_oracle agrees with uc_meet");
            o.require(tuple_meet(&[&ms[i], &ms[j]], &st, 8) == members_of(&lib), "tuple search agrees");
        }
    }
    o.info(format!("{pairs} unordered pairs"));
    o.require(pairs == 36, "36 pairs");
    o
}

fn c6() -> Outcome {
    let mut o = Outcome::new();
    let budget = Duration::from_secs(10);

    let t = Instant::now();
    let b4 = alg(4);
    let kab = extend_by_atoms(&kmin(&b4), &b4.parse_family("a,b").unwrap()).unwrap();
    let kcd = extend_by_atoms(&kmin(&b4), &b4.parse_family("c,d").unwrap()).unwrap();
    let left = b4.parse_family("a,b").unwrap();
    let right = b4.parse_family("c,d").unwrap();
    let s = left.sum(&right).unwrap();
    let i_ok = s == b4.parse_family("ac,ad,bc,bd").unwrap()
        && kab.contains(&s)
        && kcd.contains(&s)
        && !(kab.contains(&left) && kcd.contains(&left))
        && !(kab.contains(&right) && kcd.contains(&right))
        && uc_meet(&[kab.clone(), kcd.clone()]).unwrap() == kmin(&b4)
        && !meet_oracle_contains(&[kab, kcd], &s).unwrap();
    o.require(i_ok && t.elapsed() < budget, "(i) meet is not the intersection");
    o.info(format!("(i) {:.3}s", t.elapsed().as_secs_f64()));

    let t = Instant::now();
    let m = b4.parse_family("ab,cd").unwrap().up_closure().as_family();
    let w = witness_meet_failure(&m).unwrap();
    let ii_ok = w.k1.contains(&m) && w.k2.contains(&m) && !uc_meet(&[w.k1.clone(), w.k2.clone()]).unwrap().contains(&m);
    o.require(ii_ok && t.elapsed() < budget, "(ii) meet failure witness");
    o.info(format!("(ii) x = {}, y = {}, {:.3}s", w.x, w.y, t.elapsed().as_secs_f64()));

    let t = Instant::now();
    let b3 = alg(3);
    let naive = b3.parse_family("ab,c").unwrap().up_closure().as_family();
    let ext = extend_by_set(&kmin(&b3), &naive).unwrap();
    let split_l = b3.parse_family("a,c").unwrap();
    let split_r = b3.parse_family("b,c").unwrap();
    let split_sum = split_l.sum(&split_r).unwrap();
    let cand = &ext.candidate;
    let iii_ok = ext.result.as_ref().err().is_some_and(|v| v.axiom == Axiom::K4)
        && cand.contains(&split_sum)
        && !cand.contains(&split_l)
        && !cand.contains(&split_r)
        && extend_by_atoms(&kmin(&b3), &b3.parse_family("ab,c").unwrap()).is_err();
    o.require(iii_ok && t.elapsed() < budget, "(iii) non-atom extension breaks the splitting axiom");
    o.info(format!("(iii) {{a,c}}+{{b,c}} = {split_sum}, {:.3}s", t.elapsed().as_secs_f64()));

    let t = Instant::now();
    let ov = overlap(&b4).unwrap();
    let e = |s: &str| b4.parse_element(s).unwrap().mask();
    let q = k4_quadruple(&ov, e("ab"), e("cd"), e("ac"), e("bd"));
    let iv_ok = q.as_ref().is_some_and(|w| w.sum_is_clique && !w.left_is_clique && !w.right_is_clique)
        && k4_violation_witness(&ov).is_some();
    o.require(iv_ok && t.elapsed() < budget, "(iv) cliques do not split");
    o.info(format!("(iv) {:.3}s", t.elapsed().as_secs_f64()));
    o
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let lo = kmin(&b);
    let lo_members = members_of(&lo);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for c in 0u64..256 {
        if lo_members.has(c) {
            continue;
        }
        checked += 1;
        let m = family(&b, c);
        let ext = extend_by_set(&lo, &m).unwrap();
        let mut cand = Members::empty(8);
        for f in ext.candidate.codes() {
            cand.add(f);
        }
        let is_uc = uc_axioms(&cand, 8).is_ok();
        o.require(is_uc == ext.is_uc(), "library axiom check agrees with the oracle");
        o.require(!is_uc || is_up_closed(c, 8), "an extension that is a UC comes from a stack");
        let grill = c != 0 && c & 1 == 0 && is_up_closed(c, 8) && (0..8u32).all(|x| {
            (0..8u32).all(|y| c >> (x | y) & 1 == 0 || c >> x & 1 == 1 || c >> y & 1 == 1)
        });
        o.require(grill == m.is_grill(), "library grill test agrees with the oracle");
        if is_uc != grill {
            mismatches.push(format!("M = {m}: is_uc = {is_uc}, is_grill = {grill}"));
        }
    }
    o.info(format!("{checked} families outside Kmin"));
    for s in &mismatches {
        o.info(s.clone());
    }
    o.require(mismatches.is_empty(), format!("{} families where is_uc and is_grill differ", mismatches.len()));
    o
}

fn c8() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let k = |s: &str| extend_by_atoms(&kmin(&b), &b.parse_family(s).unwrap()).unwrap();
    let curly = uc_join(&[k("a,b"), k("a,c"), k("b,c")]).unwrap();
    let kabc = k("a,b,c");
    let abc = b.parse_family("a,b,c").unwrap();
    o.require(curly != kabc, "the two UCs differ");
    o.require(kabc.contains(&abc) && !curly.contains(&abc), "{a,b,c} separates them");
    let full = full_contact(&b).unwrap();
    o.require(derive_contact(&curly).unwrap() == full, "join of pair extensions induces the full contact");
    o.require(derive_contact(&kabc).unwrap() == full, "K_{a,b,c} induces the full contact");
    o.require(smallest_uc_for(&full) == curly, "smallest UC for the full contact");
    o.require(largest_uc_for(&full) == kabc, "largest UC for the full contact");
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    let size = 4u32;
    let all = 1u64 << size;
    let sim = |f: u64, g: u64| supports(f, g) && supports(g, f);
    for f in 0..all {
        let upf = up(f, size);
        o.require(sim(f, upf), "(9) F ∼ ↑F");
        for g in 0..all {
            let fg = sum(f, g);
            o.require(supports(f, fg), "(1) F ≼ F+G");
            o.require(supports(f, g) == (g & !upf == 0), "(6) F ≼ G iff G ⊆ ↑F");
            o.require(f & !g != 0 || supports(g, f), "(7) F ⊆ G gives G ≼ F");
            o.require(sim(f, g) == (upf == up(g, size)), "(8) F ∼ G iff ↑F = ↑G");
            // (10) nonempty families F supports are the nonempty subsets of ↑F
            o.require(g == 0 || supports(f, g) == (g & !upf == 0), "(10)");
            for h in 0..all {
                o.require(!supports(fg, h) || (supports(f, h) && supports(g, h)), "(2)");
                o.require(sum(fg, h) == sum(f, sum(g, h)), "(5)");
                o.require(!(supports(f, g) && supports(g, h)) || supports(f, h), "(4)");
                for m in 0..all {
                    o.require(!(supports(f, h) && supports(g, m)) || supports(fg, sum(h, m)), "(3)");
                }
            }
        }
    }
    let b2 = alg(2);
    let b3 = alg(3);
    // the class of an element
    for x in 0..size {
        for m in 0..all {
            let direct = m >> x & 1 == 1 && elems(m).all(|y| leq(x, y));
            o.require(sim(1 << x, m) == direct, "class of an element");
        }
    }
    let is_grill = |g: u64, sz: u32| {
        g != 0 && g & 1 == 0 && is_up_closed(g, sz) && (0..sz).all(|x| (0..sz).all(|y| g >> (x | y) & 1 == 0 || g >> x & 1 == 1 || g >> y & 1 == 1))
    };
    let is_proper_ideal = |i: u64, sz: u32| {
        let full = (1u64 << sz) - 1;
        i & 1 == 1
            && i != full
            && elems(i).all(|x| (0..sz).all(|y| !leq(y, x) || i >> y & 1 == 1))
            && elems(i).all(|x| elems(i).all(|y| i >> (x | y) & 1 == 1))
    };
    for (b, sz) in [(&b2, 4u32), (&b3, 8u32)] {
        let full = (1u64 << sz) - 1;
        for g in 0..1u64 << sz {
            o.require(is_grill(g, sz) == family(b, g).is_grill(), "library grill test");
            o.require(is_grill(g, sz) == is_proper_ideal(full & !g, sz), "grill iff complement is a proper ideal");
        }
        let st = stacks(sz);
        for &g in st.iter().filter(|&&g| is_grill(g, sz)) {
            let prime = st.iter().all(|&u| st.iter().all(|&v| (u & v) & !g != 0 || u & !g == 0 || v & !g == 0));
            o.require(prime, "grills are meet-prime");
            let filters: Vec<u64> = (1..1u64 << sz)
                .filter(|&f| f >> (sz - 1) & 1 == 1 && is_up_closed(f, sz) && elems(f).all(|x| elems(f).all(|y| f >> (x & y) & 1 == 1)))
                .collect();
            for &f in filters.iter().filter(|&&f| f & !g == 0) {
                // atoms are the elements 1 << a, for a below log2 of the carrier size
            let found = (0..sz.trailing_zeros()).any(|a| {
                    let u = up(1 << (1u32 << a), sz);
                    f & !u == 0 && u & !g == 0
                });
                o.require(found, "finite grill lemma");
            }
        }
        // meet-prime stacks other than B are grills, except the empty stack
        let meet_prime_non_grill: Vec<u64> = st
            .iter()
            .copied()
            .filter(|&g| g != full)
            .filter(|&g| st.iter().all(|&u| st.iter().all(|&v| (u & v) & !g != 0 || u & !g == 0 || v & !g == 0)))
            .filter(|&g| !is_grill(g, sz))
            .collect();
        o.require(meet_prime_non_grill.iter().all(|&g| g == 0), "meet-prime stacks are grills or empty");
    }
    // prime characterization for sums, every G over two atoms
    let mut literal_fail = Vec::new();
    for g in 0..all {
        let prime = (0..all).all(|f| (0..all).all(|h| sum(f, h) & !g != 0 || f & !g == 0 || h & !g == 0));
        let splits = (0..size).all(|x| (0..size).all(|y| g >> (x | y) & 1 == 0 || g >> x & 1 == 1 || g >> y & 1 == 1));
        o.require(prime == splits, "prime for sums iff joins split");
        if is_grill(g, size) {
            o.require(prime, "grills are prime for sums");
        }
        if prime != is_grill(g, size) {
            literal_fail.push(format!("{}", family(&b2, g)));
        }
    }
    o.info(format!(
        "prime-for-sums but not a grill: {} (these satisfy the splitting condition but are empty, contain 0 or are not up-closed)",
        literal_fail.join(" ")
    ));
    o.require(literal_fail.is_empty(), "grill iff prime for sums, over every family");
    o
}

fn c10() -> Outcome {
    let mut o = Outcome::new();
    let points: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
    let spaces = enumerate_topologies(&points).unwrap();
    o.info(format!("{} topologies on three points", spaces.len()));
    o.require(spaces.len() == 29, "29 topologies");
    for x in &spaces {
        let rc = rc_algebra(x).unwrap();
        let a = rc.algebra();
        let mut sys = FamilySystem::new(a).unwrap();
        for c in 1u64..1 << a.carrier_size() {
            let common = elems(c).fold(x.full_mask(), |acc, m| acc & rc.extent(m));
            if common != 0 {
                sys.insert(&family(a, c)).unwrap();
            }
        }
        let from_def = uc_from_explicit(&sys);
        let mut m = Members::empty(a.carrier_size() as u32);
        for c in sys.codes() {
            m.add(c);
        }
        o.require(uc_axioms(&m, a.carrier_size() as u32).is_ok(), "oracle axiom check");
        o.require(from_def.is_ok(), "library axiom check");
        if let Ok(k) = from_def {
            o.require(intersection_uc(&rc).unwrap() == k, "intersection_uc matches the definition");
            o.require(kmin(a).is_subset_of(&k) && k.is_subset_of(&kmax(a)), "between Kmin and Kmax");
        }
    }
    let opens: Vec<Vec<&str>> = vec![vec![], vec!["l"], vec!["r"], vec!["l", "r"], vec!["l", "m", "r"]];
    let x = make_space(vec!["l".into(), "m".into(), "r".into()], &opens).unwrap();
    let rc = rc_algebra(&x).unwrap();
    o.require(rc.algebra().carrier_size() == 4, "four regular closed sets");
    o.require(rc.extents() == [0, 0b011, 0b110, 0b111], "they are ∅, {l,m}, {m,r}, X");
    let k = intersection_uc(&rc).unwrap();
    o.require(k == kmax(rc.algebra()) && k != kmin(rc.algebra()), "K^S = Kmax and Kmax differs from Kmin");
    o
}

fn c11() -> Outcome {
    let mut o = Outcome::new();
    let b = alg(3);
    let lo = kmin(&b);
    let f = b.parse_family("ab,ac,bc").unwrap();
    o.require(!lo.contains(&f), "{ab, ac, bc} is not in Kmin");
    let lower = (1..8u32).any(|x| f.masks().all(|y| leq(x, y)));
    o.require(!lower, "it has no nonzero lower bound");
    let listed = ["a,b", "a,c", "b,c", "a,b,c", "a,bc", "b,ac", "c,ab"];
    o.require(
        listed.iter().all(|s| !b.parse_family(s).unwrap().similar(&f).unwrap()),
        "it is similar to none of the seven listed families",
    );
    let st = stacks(8);
    let full = 0xffu64;
    let smax = kmax(&b).stack_system().unwrap();
    let b_stack = Family::from_masks(&b, 0..8).up_closure();
    o.require(st.contains(&full), "B is a stack");
    o.require(!smax.contains(&b_stack), "B is not in S_Kmax");
    o.require(smax.len() == st.len() - 2, "S_Kmax is every stack but ∅ and B");
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("enumeration ground truth", c1, 60),
        ("sigma isomorphism", c2, 60),
        ("axiom suites", c3, 30),
        ("lattice laws", c4, 60),
        ("meet formula oracle", c5, 120),
        ("counterexamples reproduced", c6, 40),
        ("K^M characterization", c7, 60),
        ("same contact, different UC", c8, 10),
        ("support and grill properties", c9, 60),
        ("topology", c10, 60),
        ("documented discrepancies", c11, 5),
    ];
    let mut passed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut out = run();
        let secs = t.elapsed().as_secs_f64();
        if secs > *budget as f64 {
            out.ok = false;
            out.lines.push(format!("failed: over the {budget}s budget"));
        }
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        if out.ok {
            passed += 1;
        }
        println!("criterion {:>2}: {verdict}  {name}  ({secs:.2}s, budget {budget}s)", i + 1);
        let mut seen = std::collections::BTreeSet::new();
        for l in out.lines {
            if seen.insert(l.clone()) {
                println!("    {l}");
            }
        }
    }
    println!("acceptance: {passed}/{} criteria PASS", criteria.len());
}
