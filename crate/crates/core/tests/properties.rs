use proptest::prelude::*;
use uclab_core::families::{enumerate_grills, enumerate_stacks, grill_of_atoms};
use uclab_core::simplicial::{enumerate_ucs, sigma, sigma_inverse, SimplicialComplex};
use uclab_core::uca::{kmax, kmin, uc_join, uc_meet};
use uclab_core::{ElemSet, Family, FiniteBooleanAlgebra};

fn alg(n: usize) -> FiniteBooleanAlgebra {
    FiniteBooleanAlgebra::with_atoms(n).unwrap()
}

fn all_families(b: &FiniteBooleanAlgebra) -> Vec<Family<'_>> {
    let n = b.n_atoms();
    (0u64..1 << b.carrier_size())
        .map(|c| Family::from_set(b, ElemSet::from_code(n, c)))
        .collect()
}

fn leq(x: u32, y: u32) -> bool {
    x & !y == 0
}

/// `F ≼ G` straight from the definition.
fn supports_def(f: &Family<'_>, g: &Family<'_>) -> bool {
    g.masks().all(|y| f.masks().any(|x| leq(x, y)))
}

fn up(f: &Family<'_>) -> ElemSet {
    f.set().up_closure()
}

#[test]
fn support_is_a_preorder_and_similarity_an_equivalence() {
    let b = alg(2);
    let fs = all_families(&b);
    for f in &fs {
        assert!(f.supports(f).unwrap());
        for g in &fs {
            assert_eq!(f.supports(g).unwrap(), supports_def(f, g));
            assert_eq!(f.similar(g).unwrap(), g.similar(f).unwrap());
            for h in &fs {
                if f.supports(g).unwrap() && g.supports(h).unwrap() {
                    assert!(f.supports(h).unwrap());
                }
            }
        }
    }
}

#[test]
fn elementary_support_facts() {
    let b = alg(2);
    let fs = all_families(&b);
    for f in &fs {
        let uf = Family::from_set(&b, up(f));
        // (9) F ∼ ↑F
        assert!(f.similar(&uf).unwrap());
        // (10) nonempty families supported by F are the nonempty subsets of ↑F
        for g in &fs {
            let fg = f.sum(g).unwrap();
            // (1) F ≼ F + G
            assert!(f.supports(&fg).unwrap());
            // (6) F ≼ G iff G ⊆ ↑F
            assert_eq!(f.supports(g).unwrap(), g.set().is_subset(&up(f)));
            // (7) F ⊆ G implies G ≼ F
            if f.is_subset(g) {
                assert!(g.supports(f).unwrap());
            }
            // (8) F ∼ G iff ↑F = ↑G
            assert_eq!(f.similar(g).unwrap(), up(f) == up(g));
            assert_eq!(!g.is_empty() && f.supports(g).unwrap(), !g.is_empty() && g.set().is_subset(&up(f)));
            // ↑(F + G) = ↑F ∩ ↑G
            assert_eq!(up(&fg), up(f).intersection(&up(g)));
            for h in &fs {
                // (2)
                if fg.supports(h).unwrap() {
                    assert!(f.supports(h).unwrap() && g.supports(h).unwrap());
                }
                // (5)
                assert_eq!(fg.sum(h).unwrap(), f.sum(&g.sum(h).unwrap()).unwrap());
                // (4)
                if f.supports(g).unwrap() && g.supports(h).unwrap() {
                    assert!(f.supports(h).unwrap());
                }
                // co-Heyting auxiliary: G ∪ (H1 + H2) ≼ (G ∪ H1) + (G ∪ H2)
                let left = f.union(&g.sum(h).unwrap()).unwrap();
                let right = f.union(g).unwrap().sum(&f.union(h).unwrap()).unwrap();
                assert!(left.supports(&right).unwrap());
            }
        }
    }
    // (3) over all quadruples
    for f in &fs {
        for h in fs.iter().filter(|h| f.supports(h).unwrap()) {
            for g in &fs {
                for m in fs.iter().filter(|m| g.supports(m).unwrap()) {
                    let l = f.sum(g).unwrap();
                    let r = h.sum(m).unwrap();
                    assert!(l.supports(&r).unwrap());
                }
            }
        }
    }
}

#[test]
fn stack_sums_are_intersections() {
    let b = alg(3);
    let stacks = enumerate_stacks(&b).unwrap();
    for u in &stacks {
        for v in &stacks {
            let sum = u.as_family().sum(&v.as_family()).unwrap();
            assert_eq!(sum.set(), u.intersection(v).unwrap().set());
        }
    }
}

#[test]
fn class_of_an_element() {
    let b = alg(2);
    for x in 0..=b.top_mask() {
        let fx = Family::from_masks(&b, [x]);
        for m in all_families(&b) {
            let in_class = fx.similar(&m).unwrap();
            let direct = m.contains_mask(x) && m.masks().all(|y| leq(x, y));
            assert_eq!(in_class, direct, "x = {x}, M = {m}");
        }
    }
}

#[test]
fn grills_and_proper_ideals() {
    let b = alg(3);
    for g in all_families(&b) {
        let c = g.complement().classify();
        assert_eq!(g.is_grill(), c.is_proper_ideal, "{g}");
    }
}

#[test]
fn grills_are_the_meet_prime_stacks() {
    let b = alg(3);
    let stacks = enumerate_stacks(&b).unwrap();
    let grills = enumerate_grills(&b).unwrap();
    assert_eq!(grills.len(), 7);
    for g in &stacks {
        let prime = !g.is_full()
            && stacks.iter().all(|u| {
                stacks.iter().all(|v| {
                    !u.intersection(v).unwrap().is_subset(g) || u.is_subset(g) || v.is_subset(g)
                })
            });
        let is_grill = g.as_family().is_grill();
        if is_grill {
            assert!(prime, "grill {g} is not meet-prime");
        }
        // the empty stack is meet-prime but is not a grill
        if !g.is_empty() {
            assert_eq!(prime, is_grill, "{g}");
        }
    }
}

#[test]
fn grills_are_prime_for_sums() {
    let b = alg(2);
    let fs = all_families(&b);
    for g in &fs {
        let prime = fs.iter().all(|f| {
            fs.iter().all(|h| {
                !f.sum(h).unwrap().is_subset(g) || f.is_subset(g) || h.is_subset(g)
            })
        });
        let splits = (0..=b.top_mask())
            .all(|x| (0..=b.top_mask()).all(|y| !g.contains_mask(x | y) || g.contains_mask(x) || g.contains_mask(y)));
        if g.is_grill() {
            assert!(prime);
        }
        assert_eq!(prime, splits, "{g}");
        if prime && g.is_stack() && !g.is_empty() && !g.contains_zero() {
            assert!(g.is_grill());
        }
    }
}

#[test]
fn finite_grill_lemma() {
    let b = alg(3);
    let filters: Vec<Family> = all_families(&b).into_iter().filter(|f| f.classify().is_filter).collect();
    let ultrafilters: Vec<Family> = b.atoms().into_iter().map(|a| a.principal_filter()).collect();
    for g in enumerate_grills(&b).unwrap() {
        for f in filters.iter().filter(|f| f.is_subset(&g)) {
            assert!(
                ultrafilters.iter().any(|u| f.is_subset(u) && u.is_subset(&g)),
                "{f} inside {g}"
            );
        }
    }
}

#[test]
fn grills_are_unions_of_ultrafilters() {
    let b = alg(3);
    let from_def: Vec<Family> = all_families(&b).into_iter().filter(|g| g.is_grill()).collect();
    let mut listed: Vec<Family> = (1..8).map(|a| grill_of_atoms(&b, a).unwrap()).collect();
    listed.sort_by_key(|g| g.set().clone());
    let mut from_def = from_def;
    from_def.sort_by_key(|g| g.set().clone());
    assert_eq!(listed, from_def);
}

#[test]
fn uc_closure_properties() {
    let b = alg(3);
    let fs = all_families(&b);
    let nonempty: Vec<&Family> = fs.iter().filter(|f| !f.is_empty()).collect();
    for k in enumerate_ucs(&b).unwrap() {
        assert!(kmin(&b).is_subset_of(&k) && k.is_subset_of(&kmax(&b)));
        for f in &nonempty {
            let inside = k.contains(f);
            // similarity and nonempty subsets
            assert_eq!(inside, k.contains(&Family::from_set(&b, up(f))));
            if inside {
                for x in f.masks() {
                    let smaller = Family::from_set(&b, f.set().without(x));
                    if !smaller.is_empty() {
                        assert!(k.contains(&smaller));
                    }
                }
                // some family of atoms inside K supports F
                let atoms_ok = (1..=b.top_mask()).any(|h| {
                    let g = Family::from_masks(&b, (0..3).filter(|i| h >> i & 1 == 1).map(|i| 1u32 << i));
                    k.contains(&g) && g.supports(f).unwrap()
                });
                assert!(atoms_ok, "{f}");
            }
        }
        // F ∈ K or G ∈ K gives F + G ∈ K
        for f in &nonempty {
            for g in &nonempty {
                if k.contains(f) || k.contains(g) {
                    assert!(k.contains(&f.sum(g).unwrap()));
                }
            }
        }
        // splitting of triple sums, over stack generators
        let gens: Vec<Family> = enumerate_stacks(&b)
            .unwrap()
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| s.generator_family())
            .collect();
        for f in &gens {
            for g in &gens {
                for h in &gens {
                    let sum = f.sum(g).unwrap().sum(h).unwrap();
                    if k.contains(&sum) {
                        assert!(k.contains(f) || k.contains(g) || k.contains(h));
                    }
                }
            }
        }
    }
}

fn complex_strategy(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..(1 << n), 0..8)
}

fn complex_of(n: usize, tops: &[u32]) -> SimplicialComplex {
    let faces = ElemSet::from_masks(n, tops.iter().copied().chain((0..n).map(|i| 1 << i)))
        .down_closure()
        .without(0);
    let vertices = FiniteBooleanAlgebra::with_atoms(n).unwrap().atom_names().to_vec();
    SimplicialComplex::from_masks(vertices, faces.iter()).unwrap()
}

proptest! {
    #[test]
    fn up_closure_and_support_on_four_atoms(fc in 0u64..1 << 16, gc in 0u64..1 << 16) {
        let b = alg(4);
        let f = Family::from_set(&b, ElemSet::from_code(4, fc));
        let g = Family::from_set(&b, ElemSet::from_code(4, gc));
        let uf = up(&f);
        prop_assert_eq!(uf.up_closure(), uf.clone());
        prop_assert_eq!(f.supports(&g).unwrap(), supports_def(&f, &g));
        prop_assert_eq!(f.supports(&g).unwrap(), g.set().is_subset(&uf));
        prop_assert_eq!(up(&f.sum(&g).unwrap()), uf.intersection(&up(&g)));
    }

    #[test]
    fn membership_is_decided_by_up_closure(tops in complex_strategy(5), fam in prop::collection::vec(1u32..32, 1..6)) {
        let b = alg(5);
        let k = sigma_inverse(&b, &complex_of(5, &tops)).unwrap();
        let f = Family::from_masks(&b, fam.iter().copied());
        let uf = Family::from_set(&b, up(&f));
        prop_assert_eq!(k.contains(&f), k.contains(&uf));
        let lower_bound = f.has_nonzero_lower_bound();
        if lower_bound {
            prop_assert!(k.contains(&f));
        }
    }

    #[test]
    fn lattice_laws_on_five_atoms(a in complex_strategy(5), c in complex_strategy(5), d in complex_strategy(5)) {
        let b = alg(5);
        let k1 = sigma_inverse(&b, &complex_of(5, &a)).unwrap();
        let k2 = sigma_inverse(&b, &complex_of(5, &c)).unwrap();
        let k3 = sigma_inverse(&b, &complex_of(5, &d)).unwrap();
        let j = uc_join(&[k1.clone(), k2.clone()]).unwrap();
        let m = uc_meet(&[k1.clone(), k2.clone()]).unwrap();
        prop_assert!(k1.is_subset_of(&j) && k2.is_subset_of(&j));
        prop_assert!(m.is_subset_of(&k1) && m.is_subset_of(&k2));
        prop_assert_eq!(uc_join(&[k1.clone(), m.clone()]).unwrap(), k1.clone());
        prop_assert_eq!(uc_meet(&[k1.clone(), j.clone()]).unwrap(), k1.clone());
        // binary join distributes over meets
        let left = uc_join(&[k3.clone(), m.clone()]).unwrap();
        let right = uc_meet(&[
            uc_join(&[k3.clone(), k1.clone()]).unwrap(),
            uc_join(&[k3.clone(), k2.clone()]).unwrap(),
        ]).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(sigma(&m), sigma(&k1).intersection(&sigma(&k2)).unwrap());
    }
}
