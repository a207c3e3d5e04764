//! Verification suites run by `uclab verify`. Every suite is exhaustive or
//! takes the lexicographically first witness, so runs are reproducible.

use serde::Serialize;
use serde_json::{json, Value};
use uclab_core::contact::{
    check_contact, check_hypercontact, derive_contact, derive_hypercontact, full_contact, k4_quadruple,
    k4_violation_witness, largest_uc_for, overlap, smallest_uc_for,
};
use uclab_core::families::{enumerate_grills, enumerate_stacks, grill_of_atoms, similar};
use uclab_core::io::Doc;
use uclab_core::simplicial::{enumerate_complexes, enumerate_ucs, sigma, sigma_inverse};
use uclab_core::stacksys::{check_ss, ks_of, sk_of, smax, smin};
use uclab_core::topology::{enumerate_topologies, intersection_uc, make_space, rc_algebra};
use uclab_core::uca::{
    chain_meet, check_explicit, extend_by_atoms, extend_by_grills, extend_by_set, kmax, kmin, meet_oracle,
    meet_oracle_contains, uc_join, uc_meet, witness_meet_failure,
};
use uclab_core::{Family, FiniteBooleanAlgebra, Stack, Ultracontact};

#[derive(Debug, Serialize)]
pub struct Failure {
    pub check: String,
    pub counterexample: Value,
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub id: &'static str,
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>, cx: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(Failure {
                check: what.into(),
                counterexample: cx(),
            });
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub struct Suite {
    pub id: &'static str,
    pub about: &'static str,
    run: fn(&mut Report) -> anyhow::Result<()>,
}

impl Suite {
    pub fn run(&self) -> anyhow::Result<Report> {
        let mut r = Report {
            id: self.id,
            ..Default::default()
        };
        (self.run)(&mut r)?;
        Ok(r)
    }
}

pub const SUITES: &[Suite] = &[
    Suite { id: "smallest-uc", about: "Kmin lies below every ultracontact", run: smallest_uc },
    Suite { id: "largest-uc", about: "Kmax lies above every ultracontact", run: largest_uc },
    Suite { id: "meet-formula", about: "the meet formula agrees with the face-set meet", run: meet_formula },
    Suite { id: "chain-meet", about: "meets of chains are intersections", run: chain_meets },
    Suite { id: "co-heyting", about: "binary join distributes over meets", run: co_heyting },
    Suite { id: "grill-extension", about: "adding grills gives the least ultracontact containing them", run: grill_extension },
    Suite { id: "kM-iff-grill", about: "Kmin^M is an ultracontact exactly when M is a grill", run: km_iff_grill },
    Suite { id: "meet-failure-witness", about: "non-grill stacks escape the meet of two extensions", run: meet_failure_witness },
    Suite { id: "meet-not-intersection", about: "the meet is not the intersection", run: meet_not_intersection },
    Suite { id: "contact-axioms", about: "derived contacts satisfy the contact axioms", run: contact_axioms },
    Suite { id: "same-contact-different-uc", about: "distinct ultracontacts can induce the same contact", run: same_contact },
    Suite { id: "clique-k4-failure", about: "cliques of a contact do not split over sums", run: clique_k4 },
    Suite { id: "hypercontact", about: "derived hypercontacts satisfy their axioms", run: hypercontact },
    Suite { id: "sigma-iso", about: "ultracontacts and complexes are order isomorphic", run: sigma_iso },
    Suite { id: "contact-sandwich", about: "every ultracontact sits between the extremes for its contact", run: contact_sandwich },
    Suite { id: "stack-roundtrip", about: "ultracontacts and stack systems convert both ways", run: stack_roundtrip },
    Suite { id: "smin-smax", about: "least and greatest stack systems", run: smin_smax },
    Suite { id: "topological-uc", about: "common-point families of regular closed sets", run: topological_uc },
    Suite { id: "kmin-example-discrepancy", about: "non-members of Kmin on three atoms", run: kmin_discrepancy },
    Suite { id: "smax-discrepancy", about: "B is not in the greatest stack system", run: smax_discrepancy },
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

fn alg(n: usize) -> FiniteBooleanAlgebra {
    FiniteBooleanAlgebra::with_atoms(n).expect("small algebra")
}

fn uc_json(k: &Ultracontact<'_>) -> Value {
    serde_json::to_value(Doc::of_uc(k, false).expect("small algebra")).unwrap()
}

fn fam_json(f: &Family<'_>) -> Value {
    json!(f.names())
}

fn k_atoms<'a>(b: &'a FiniteBooleanAlgebra, atoms: &str) -> Ultracontact<'a> {
    extend_by_atoms(&kmin(b), &b.parse_family(atoms).unwrap()).unwrap()
}

fn smallest_uc(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=4 {
        let b = alg(n);
        let lo = kmin(&b);
        for k in enumerate_ucs(&b)? {
            r.check(lo.is_subset_of(&k), format!("Kmin below every UC on {n} atoms"), || uc_json(&k));
        }
    }
    for n in 1..=3 {
        let b = alg(n);
        let sys = kmin(&b).to_explicit()?;
        r.check(check_explicit(sys.members()).is_ok(), "explicit Kmin passes the axioms", || json!(n));
        for f in (1u64..1 << b.carrier_size()).map(|c| Family::from_masks(&b, bits(c))) {
            let lower = (1..=b.top_mask()).any(|x| f.masks().all(|m| x & !m == 0));
            r.check(sys.contains(&f) == (!f.is_empty() && lower), "Kmin is the families with a nonzero lower bound", || fam_json(&f));
        }
    }
    Ok(())
}

fn bits(code: u64) -> impl Iterator<Item = u32> {
    (0..64u32).filter(move |i| code >> i & 1 == 1)
}

fn largest_uc(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=4 {
        let b = alg(n);
        let hi = kmax(&b);
        for k in enumerate_ucs(&b)? {
            r.check(k.is_subset_of(&hi), format!("every UC below Kmax on {n} atoms"), || uc_json(&k));
        }
    }
    let b = alg(3);
    let sys = kmax(&b).to_explicit()?;
    r.check(check_explicit(sys.members()).is_ok(), "explicit Kmax passes the axioms", || Value::Null);
    for c in 1u64..256 {
        let f = Family::from_masks(&b, bits(c));
        r.check(sys.contains(&f) == !f.contains_zero(), "Kmax is the nonempty 0-free families", || fam_json(&f));
    }
    Ok(())
}

fn meet_formula(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let ucs = enumerate_ucs(&b)?;
    let mut pairs = 0;
    for (i, k1) in ucs.iter().enumerate() {
        for k2 in &ucs[i + 1..] {
            pairs += 1;
            let both = [k1.clone(), k2.clone()];
            let oracle = meet_oracle(&both)?;
            let meet = uc_meet(&both)?;
            r.check(oracle == meet, "formula meet equals face meet", || json!([uc_json(k1), uc_json(k2)]));
        }
    }
    r.note(format!("{pairs} unordered pairs on three atoms"));
    for k in &ucs {
        r.check(meet_oracle(std::slice::from_ref(k))? == *k, "formula meet of one UC is itself", || uc_json(k));
    }
    let b4 = alg(4);
    let kab = k_atoms(&b4, "a,b");
    let kcd = k_atoms(&b4, "c,d");
    let sum = b4.parse_family("ac,ad,bc,bd")?;
    let inside = meet_oracle_contains(&[kab, kcd], &sum)?;
    r.check(!inside, "formula meet on four atoms excludes {a,b}+{c,d}", || fam_json(&sum));
    Ok(())
}

fn chain_meets(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let ucs = enumerate_ucs(&b)?;
    let chains: Vec<Vec<&Ultracontact>> = (1u32..1 << ucs.len())
        .map(|s| bits(s as u64).map(|i| &ucs[i as usize]).collect::<Vec<_>>())
        .filter(|c: &Vec<&Ultracontact>| {
            c.iter().all(|a| c.iter().all(|b| a.is_subset_of(b) || b.is_subset_of(a)))
        })
        .collect();
    for c in &chains {
        let owned: Vec<Ultracontact> = c.iter().map(|k| (*k).clone()).collect();
        let via_chain = chain_meet(&owned)?;
        let inter: Vec<Stack> = owned[0]
            .witnesses()?
            .into_iter()
            .filter(|s| owned.iter().all(|k| k.contains_stack(s)))
            .collect();
        let from_inter = Ultracontact::from_witnesses(&b, inter)?;
        r.check(via_chain == from_inter, "chain meet is the witness intersection", || {
            json!(owned.iter().map(uc_json).collect::<Vec<_>>())
        });
        r.check(via_chain == uc_meet(&owned)?, "chain meet is the lattice meet", || {
            json!(owned.iter().map(uc_json).collect::<Vec<_>>())
        });
    }
    r.note(format!("{} chains on three atoms", chains.len()));
    let incomparable = [k_atoms(&b, "a,b"), k_atoms(&b, "a,c")];
    r.check(chain_meet(&incomparable).is_err(), "incomparable inputs are rejected", || Value::Null);
    Ok(())
}

fn co_heyting(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let ucs = enumerate_ucs(&b)?;
    for k in &ucs {
        for s in 1u32..1 << ucs.len() {
            let chosen: Vec<Ultracontact> = bits(s as u64).map(|i| ucs[i as usize].clone()).collect();
            let left = uc_join(&[k.clone(), uc_meet(&chosen)?])?;
            let joined: Vec<Ultracontact> = chosen.iter().map(|ki| uc_join(&[k.clone(), ki.clone()])).collect::<Result<_, _>>()?;
            let right = uc_meet(&joined)?;
            r.check(left == right, "K join meet(Ki) = meet(K join Ki)", || {
                json!({"k": uc_json(k), "subset": s})
            });
        }
    }
    Ok(())
}

fn grill_extension(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let ucs = enumerate_ucs(&b)?;
    let grills = enumerate_grills(&b)?;
    for k in &ucs {
        for s in 1u32..1 << grills.len() {
            let gs: Vec<Family> = bits(s as u64).map(|i| grills[i as usize].clone()).collect();
            let ext = extend_by_grills(k, &gs)?;
            let explicit = ext.to_explicit()?;
            r.check(check_explicit(explicit.members()).is_ok(), "extension passes the axioms", || uc_json(&ext));
            let contains_all = k.is_subset_of(&ext)
                && gs.iter().all(|g| {
                    let n = b.n_atoms();
                    (1u64..1 << b.carrier_size())
                        .map(|c| uclab_core::ElemSet::from_code(n, c))
                        .filter(|f| f.is_subset(g.set()))
                        .all(|f| ext.contains(&Family::from_set(&b, f)))
                });
            r.check(contains_all, "extension contains K and every nonempty subfamily of each grill", || uc_json(&ext));
            for other in &ucs {
                let admits = k.is_subset_of(other) && gs.iter().all(|g| other.contains(g));
                if admits {
                    r.check(ext.is_subset_of(other), "extension is the least such UC", || {
                        json!({"extension": uc_json(&ext), "other": uc_json(other)})
                    });
                }
            }
        }
        for atom in b.atoms() {
            let uf = atom.principal_filter();
            r.check(extend_by_grills(k, &[uf.clone()])? == *k, "principal ultrafilters add nothing", || fam_json(&uf));
        }
    }
    r.check(extend_by_grills(&kmin(&b), &grills)? == kmax(&b), "all grills give Kmax", || Value::Null);
    Ok(())
}

fn km_iff_grill(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let lo = kmin(&b);
    let mut outside = 0;
    for c in 0u64..256 {
        let m = Family::from_masks(&b, bits(c));
        if lo.contains(&m) {
            continue;
        }
        outside += 1;
        let ext = extend_by_set(&lo, &m)?;
        if m.is_empty() {
            r.check(ext.is_uc(), "the empty family changes nothing", || Value::Null);
            continue;
        }
        r.check(ext.is_uc() == m.is_grill(), "Kmin^M is a UC iff M is a grill", || {
            json!({"M": fam_json(&m), "is_uc": ext.is_uc(), "is_grill": m.is_grill()})
        });
        if ext.is_uc() {
            r.check(m.is_stack(), "a proper extension forces M to be a stack", || fam_json(&m));
        }
    }
    r.note(format!("{outside} families outside Kmin, the empty family excepted as it adds nothing"));
    Ok(())
}

fn meet_failure_witness(r: &mut Report) -> anyhow::Result<()> {
    for n in 2..=4 {
        let b = alg(n);
        let mut hits = 0;
        for s in enumerate_stacks(&b)? {
            let m = s.as_family();
            let Ok(w) = witness_meet_failure(&m) else {
                continue;
            };
            hits += 1;
            let meet = uc_meet(&[w.k1.clone(), w.k2.clone()])?;
            r.check(w.k1.contains(&m) && w.k2.contains(&m) && !meet.contains(&m), "M in both but not in the meet", || fam_json(&m));
            r.check(!m.contains_mask(w.x.mask()) && !m.contains_mask(w.y.mask()) && m.contains_mask(w.x.mask() | w.y.mask()), "x + y splits outside M", || fam_json(&m));
        }
        r.note(format!("{hits} eligible stacks on {n} atoms"));
    }
    let b4 = alg(4);
    let m = b4.parse_family("ab,cd")?.up_closure().as_family();
    let w = witness_meet_failure(&m)?;
    r.check(
        w.k1.contains(&m) && w.k2.contains(&m) && !uc_meet(&[w.k1.clone(), w.k2.clone()])?.contains(&m),
        "the four-atom example",
        || fam_json(&m),
    );
    let b3 = alg(3);
    r.check(witness_meet_failure(&b3.parse_family("a")?.up_closure().as_family()).is_err(), "↑a is rejected", || Value::Null);
    r.check(witness_meet_failure(&grill_of_atoms(&b3, 0b011)?).is_err(), "grills are rejected", || Value::Null);
    Ok(())
}

fn meet_not_intersection(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(4);
    let kab = k_atoms(&b, "a,b");
    let kcd = k_atoms(&b, "c,d");
    let left = b.parse_family("a,b")?;
    let right = b.parse_family("c,d")?;
    let sum = left.sum(&right)?;
    r.check(sum == b.parse_family("ac,ad,bc,bd")?, "{a,b}+{c,d} = {ac,ad,bc,bd}", || fam_json(&sum));
    r.check(kab.contains(&sum) && kcd.contains(&sum), "the sum lies in both", || fam_json(&sum));
    for f in [&left, &right] {
        r.check(!(kab.contains(f) && kcd.contains(f)), "neither summand lies in both", || fam_json(f));
    }
    let meet = uc_meet(&[kab.clone(), kcd.clone()])?;
    r.check(meet == kmin(&b), "the meet is Kmin", || uc_json(&meet));
    r.check(!meet.contains(&sum), "the sum is not in the meet", || fam_json(&sum));
    r.check(!meet_oracle_contains(&[kab, kcd], &sum)?, "the meet formula agrees", || fam_json(&sum));
    Ok(())
}

fn contact_axioms(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=4 {
        let b = alg(n);
        for k in enumerate_ucs(&b)? {
            let c = derive_contact(&k)?;
            r.check(check_contact(c.relation()).is_ok(), format!("derived contact on {n} atoms is a contact"), || uc_json(&k));
        }
        r.check(derive_contact(&kmin(&b))? == overlap(&b)?, "Kmin induces overlap", || json!(n));
        r.check(derive_contact(&kmax(&b))? == full_contact(&b)?, "Kmax induces the full contact", || json!(n));
    }
    Ok(())
}

fn same_contact(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let pairs = [k_atoms(&b, "a,b"), k_atoms(&b, "a,c"), k_atoms(&b, "b,c")];
    let curly = uc_join(&pairs)?;
    let kabc = k_atoms(&b, "a,b,c");
    let abc = b.parse_family("a,b,c")?;
    r.check(curly != kabc, "the two UCs differ", || Value::Null);
    r.check(kabc.contains(&abc) && !curly.contains(&abc), "{a,b,c} separates them", || Value::Null);
    let full = full_contact(&b)?;
    r.check(derive_contact(&curly)? == full && derive_contact(&kabc)? == full, "both induce the full contact", || Value::Null);
    r.check(smallest_uc_for(&full) == curly, "smallest UC for the full contact", || uc_json(&smallest_uc_for(&full)));
    r.check(largest_uc_for(&full) == kabc, "largest UC for the full contact", || uc_json(&largest_uc_for(&full)));
    let ab = derive_contact(&pairs[0])?;
    let lo = overlap(&b)?;
    let extra: Vec<(u32, u32)> = ab.pairs().into_iter().filter(|&(x, y)| !lo.related(x, y)).collect();
    r.check(extra == vec![(0b001, 0b010), (0b001, 0b110), (0b010, 0b101)], "K_{a,b} adds (a,b), (a,bc), (ac,b)", || json!(extra));
    Ok(())
}

fn clique_k4(r: &mut Report) -> anyhow::Result<()> {
    let b4 = alg(4);
    let ov = overlap(&b4)?;
    let e = |s: &str| b4.parse_element(s).map(|x| x.mask());
    let w = k4_quadruple(&ov, e("ab")?, e("cd")?, e("ac")?, e("bd")?);
    let ok = w.as_ref().is_some_and(|w| w.sum_is_clique && !w.left_is_clique && !w.right_is_clique && w.sum.len() == 4);
    r.check(ok, "(ab, cd, ac, bd) on four atoms", || json!(w));
    for n in 3..=4 {
        let b = alg(n);
        let first = k4_violation_witness(&overlap(&b)?);
        let ok = first.as_ref().is_some_and(|w| w.sum_is_clique && !w.left_is_clique && !w.right_is_clique);
        r.check(ok, format!("first witness for overlap on {n} atoms"), || json!(first));
        if let Some(w) = &first {
            r.note(format!("first on {n} atoms: p={:?} q={:?} r={:?} s={:?}", w.p, w.q, w.r, w.s));
        }
        r.check(k4_violation_witness(&full_contact(&b)?).is_none(), "full contact has none", || json!(n));
    }
    Ok(())
}

fn hypercontact(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=3 {
        let b = alg(n);
        for k in enumerate_ucs(&b)? {
            let d = derive_hypercontact(&k)?;
            r.check(check_hypercontact(d.members()).is_ok(), format!("derived hypercontact on {n} atoms"), || uc_json(&k));
            r.check(d.contains(&Family::empty(&b)), "the empty family is a member", || uc_json(&k));
        }
    }
    let b = alg(3);
    let d = derive_hypercontact(&kmin(&b))?;
    r.check(d.contains(&b.parse_family("a,ab,1")?), "{a, ab, 1} in the hypercontact of Kmin", || Value::Null);
    let dmax = derive_hypercontact(&kmax(&b))?;
    r.check(dmax.members().len() == 128, "Kmax gives all 0-free families", || json!(dmax.members().len()));
    Ok(())
}

fn sigma_iso(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=4 {
        let b = alg(n);
        let ucs = enumerate_ucs(&b)?;
        let complexes = enumerate_complexes(b.atom_names())?;
        r.check(ucs.len() == complexes.len(), format!("as many UCs as complexes on {n} atoms"), || json!([ucs.len(), complexes.len()]));
        for (k, c) in ucs.iter().zip(&complexes) {
            r.check(&sigma(k) == c, "sigma matches the complex enumeration", || uc_json(k));
            r.check(sigma_inverse(&b, &sigma(k))? == *k, "sigma is inverted", || uc_json(k));
        }
        for k1 in &ucs {
            for k2 in &ucs {
                let order = k1.is_subset_of(k2) == sigma(k1).is_subcomplex(&sigma(k2));
                r.check(order, "sigma preserves and reflects inclusion", || json!([uc_json(k1), uc_json(k2)]));
                if n == 3 {
                    let meet = sigma(&uc_meet(&[k1.clone(), k2.clone()])?) == sigma(k1).intersection(&sigma(k2))?;
                    let join = sigma(&uc_join(&[k1.clone(), k2.clone()])?) == sigma(k1).union(&sigma(k2))?;
                    r.check(meet && join, "meet and join are face intersection and union", || json!([uc_json(k1), uc_json(k2)]));
                }
            }
        }
        r.note(format!("{} UCs on {n} atoms", ucs.len()));
    }
    Ok(())
}

fn contact_sandwich(r: &mut Report) -> anyhow::Result<()> {
    for n in 2..=4 {
        let b = alg(n);
        let ucs = enumerate_ucs(&b)?;
        for k in &ucs {
            let c = derive_contact(k)?;
            let lo = smallest_uc_for(&c);
            let hi = largest_uc_for(&c);
            r.check(lo.is_subset_of(k) && k.is_subset_of(&hi), "smallest <= K <= largest", || uc_json(k));
            r.check(derive_contact(&lo)? == c && derive_contact(&hi)? == c, "both extremes induce the contact", || uc_json(k));
            if n == 3 {
                for k2 in &ucs {
                    let same_edges = k.faces().iter().filter(|h| h.count_ones() == 2).eq(k2.faces().iter().filter(|h| h.count_ones() == 2));
                    r.check((derive_contact(k2)? == c) == same_edges, "equal contacts iff equal two-atom faces", || json!([uc_json(k), uc_json(k2)]));
                }
                for x in 1..=b.top_mask() {
                    for y in 1..=b.top_mask() {
                        let by_atoms = (0..n).any(|i| {
                            (0..n).any(|j| x >> i & 1 == 1 && y >> j & 1 == 1 && k.faces().contains(1 << i | 1 << j))
                        });
                        r.check(c.related(x, y) == by_atoms, "contact is decided by atoms", || json!([x, y]));
                    }
                }
            }
        }
    }
    Ok(())
}

fn stack_roundtrip(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=3 {
        let b = alg(n);
        let ucs = enumerate_ucs(&b)?;
        for k in &ucs {
            let explicit = k.to_explicit()?;
            let s = sk_of(&explicit);
            let checked = check_ss(&b, s.members());
            r.check(checked.is_ok(), "S_K passes the stack system axioms", || uc_json(k));
            r.check(ks_of(&s)? == explicit, "K = K_{S_K}", || uc_json(k));
            r.check(sk_of(&ks_of(&s)?) == s, "S = S_{K_S}", || uc_json(k));
            r.check(check_explicit(ks_of(&s)?.members()).is_ok(), "K_S passes the UC axioms", || uc_json(k));
            for k2 in &ucs {
                let s2 = sk_of(&k2.to_explicit()?);
                r.check(k.is_subset_of(k2) == s.is_subset(&s2), "inclusion matches", || json!([uc_json(k), uc_json(k2)]));
            }
        }
    }
    Ok(())
}

fn smin_smax(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=4 {
        let b = alg(n);
        let lo = smin(&b)?;
        let hi = smax(&b)?;
        r.check(lo == kmin(&b).stack_system()?, "Smin = S_Kmin", || json!(n));
        r.check(hi == kmax(&b).stack_system()?, "Smax = S_Kmax", || json!(n));
        for k in enumerate_ucs(&b)? {
            let s = k.stack_system()?;
            r.check(lo.is_subset(&s) && s.is_subset(&hi), "every stack system lies between", || uc_json(&k));
        }
        r.note(format!("|Smin| = {}, |Smax| = {} on {n} atoms", lo.len(), hi.len()));
    }
    let b = alg(3);
    r.check(smin(&b)?.len() == 10 && smax(&b)?.len() == 18, "sizes on three atoms", || Value::Null);
    Ok(())
}

fn topological_uc(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=3 {
        let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let spaces = enumerate_topologies(&points)?;
        for x in &spaces {
            let rc = rc_algebra(x)?;
            let res = intersection_uc(&rc);
            let ok = res.as_ref().is_ok_and(|k| {
                kmin(rc.algebra()).is_subset_of(k) && k.is_subset_of(&kmax(rc.algebra()))
            });
            r.check(ok, "common-point families form a UC between Kmin and Kmax", || {
                json!({"space": Doc::of_space(x), "error": res.as_ref().err().map(|e| e.to_string())})
            });
        }
        r.note(format!("{} topologies on {n} points", spaces.len()));
    }
    let points = vec!["l".to_string(), "m".into(), "r".into()];
    let opens: Vec<Vec<&str>> = vec![vec![], vec!["l"], vec!["r"], vec!["l", "r"], vec!["l", "m", "r"]];
    let x = make_space(points, &opens)?;
    let rc = rc_algebra(&x)?;
    r.check(rc.algebra().carrier_size() == 4, "RC algebra of {l,m,r} has four elements", || json!(rc.extents()));
    let k = intersection_uc(&rc)?;
    r.check(k == kmax(rc.algebra()) && k != kmin(rc.algebra()), "intersection UC is Kmax and not Kmin", || uc_json(&k));
    let both = Family::from_masks(rc.algebra(), [0b01, 0b10]);
    r.check(k.contains(&both) && rc.extent(0b01 & 0b10) == 0, "{l,m} and {m,r} share m although their meet is 0", || Value::Null);
    Ok(())
}

fn kmin_discrepancy(r: &mut Report) -> anyhow::Result<()> {
    let b = alg(3);
    let lo = kmin(&b);
    let listed: Vec<Family> = ["a,b", "a,c", "b,c", "a,b,c", "a,bc", "b,ac", "c,ab"]
        .iter()
        .map(|s| b.parse_family(s))
        .collect::<Result<_, _>>()?;
    for f in &listed {
        r.check(!lo.contains(f), "listed family is not in Kmin", || fam_json(f));
    }
    let unlisted: Vec<Stack> = enumerate_stacks(&b)?
        .into_iter()
        .filter(|s| !s.is_empty() && !s.is_full() && !lo.contains_stack(s))
        .filter(|s| !listed.iter().any(|f| similar(f, &s.as_family()).unwrap()))
        .collect();
    let f = b.parse_family("ab,ac,bc")?;
    r.check(unlisted.len() == 1 && unlisted[0] == f.up_closure(), "exactly one 0-free class is missing from the list", || {
        json!(unlisted.iter().map(|s| s.generator_family().names()).collect::<Vec<_>>())
    });
    r.check(!lo.contains(&f), "{ab, ac, bc} is not in Kmin", || fam_json(&f));
    r.check(f.meet_of_members().is_some_and(|m| m.is_zero()), "its meet is 0", || fam_json(&f));
    r.note("the three pairwise joins have meet 0, so they lie outside Kmin");
    Ok(())
}

fn smax_discrepancy(r: &mut Report) -> anyhow::Result<()> {
    for n in 1..=4 {
        let b = alg(n);
        let full = Stack::full(&b);
        let s = kmax(&b).stack_system()?;
        r.check(full.as_family().is_stack(), "B is a stack", || json!(n));
        r.check(!s.contains(&full), "B is not in S_Kmax", || json!(n));
        r.check(!smax(&b)?.contains(&full), "B is not in Smax", || json!(n));
        let mut with_b: Vec<Stack> = s.members().collect();
        with_b.push(full);
        let err = check_ss(&b, with_b).err();
        let ss1 = err.as_ref().and_then(|e| e.violation()).is_some_and(|v| v.axiom == uclab_core::Axiom::SS1);
        r.check(ss1, "all nonempty stacks fail the axiom excluding B", || json!(n));
    }
    Ok(())
}
