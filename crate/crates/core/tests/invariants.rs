use std::collections::BTreeSet;
use std::sync::Arc;

use homquiver::poly::compositions;
use homquiver::quiver::{relation_instances, verify_flatness};
use homquiver::schubert::SchubertCalculus;
use homquiver::stability::{cube_grid, TangentStability};
use homquiver::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sys(s: Series, r: usize) -> Arc<RootSystemData> {
    Arc::new(RootSystemData::new(s, r).unwrap())
}

fn all_parabolics(s: Series, r: usize) -> Vec<ParabolicData> {
    let sy = sys(s, r);
    (1u32..(1 << r))
        .map(|mask| {
            let sigma: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            ParabolicData::new(sy.clone(), &sigma).unwrap()
        })
        .collect()
}

fn tested() -> Vec<ParabolicData> {
    let mut v = Vec::new();
    for n in 1..=5 {
        v.extend(all_parabolics(Series::A, n));
    }
    v.extend(all_parabolics(Series::D, 4));
    v.extend(all_parabolics(Series::D, 5));
    v
}

#[test]
fn full_arrows_contain_reduced_arrows() {
    for p in tested() {
        let comps = p.levi_components().unwrap();
        let hw: Vec<Weight> = comps.iter().map(|c| c.highest_weight.clone()).collect();
        let full = induced_quiver(&p, &hw, ArrowMode::Full).unwrap();
        let red = induced_quiver(&p, &hw, ArrowMode::Reduced).unwrap();
        for a in red.arrows() {
            assert!(full.arrow_from(a.source, a.label_id).is_some());
            assert!(p.is_degree_one(a.label_id));
        }
        for a in full.arrows() {
            assert_eq!(&full.vertices()[a.target] - &full.vertices()[a.source], a.label);
        }
    }
}

#[test]
fn tangent_reps_are_flat_and_structured() {
    for p in tested() {
        let t = tangent_rep(&p).unwrap();
        assert_eq!(t.rep.dims().len(), p.dimension());
        assert!(verify_flatness(&t.rep).unwrap().flat, "{:?}", p.sigma());
        assert_eq!(structure_report(&t.rep), (true, 1));
        assert_eq!(hom_dimension(&t.rep), 1);
        let (mf, _) = structure_report(&t.levi_rep);
        assert!(mf);
    }
}

#[test]
fn e_type_borels_are_flat() {
    for r in [6, 7, 8] {
        let t = tangent_rep(&ParabolicData::borel(sys(Series::E, r))).unwrap();
        assert!(verify_flatness(&t.rep).unwrap().flat);
    }
}

#[test]
fn a3_relation_count_matches_brute_force() {
    let p = ParabolicData::borel(sys(Series::A, 3));
    let s = p.system();
    let verts = p.tangent_weights().to_vec();
    let q = induced_quiver(&p, &verts, ArrowMode::Full).unwrap();
    let rels = relation_instances(&q).unwrap();
    let is_v = |w: &Weight| verts.contains(w);
    let pos = s.positive_roots();
    let mut count = 0;
    for l in &verts {
        for i in 0..pos.len() {
            for j in i + 1..pos.len() {
                let nu = &(l + &pos[i]) + &pos[j];
                if !is_v(&nu) {
                    continue;
                }
                let via_i = is_v(&(l + &pos[i]));
                let via_j = is_v(&(l + &pos[j]));
                let direct = s.is_positive_root(&(&pos[i] + &pos[j]));
                count += (via_i || via_j || direct) as usize;
            }
        }
    }
    assert_eq!(rels.len(), count);
    assert!(rels.iter().all(|r| r.coefficient.abs() <= 1));
}

#[test]
fn closed_subsets_form_a_lattice() {
    for p in all_parabolics(Series::A, 3).into_iter().chain(all_parabolics(Series::D, 4)) {
        let t = tangent_rep(&p).unwrap();
        for rep in [&t.rep, &t.levi_rep] {
            let n = rep.dims().len();
            if n > 20 {
                continue;
            }
            let subsets: BTreeSet<Vec<usize>> = closed_subsets(rep, false).unwrap().into_iter().collect();
            let full: Vec<usize> = (0..n).collect();
            let member = |s: &Vec<usize>| s.is_empty() || *s == full || subsets.contains(s);
            for a in &subsets {
                for b in &subsets {
                    let union: BTreeSet<usize> = a.iter().chain(b).copied().collect();
                    let inter: Vec<usize> = a.iter().filter(|x| b.contains(x)).copied().collect();
                    assert!(member(&union.into_iter().collect()));
                    assert!(member(&inter));
                }
            }
        }
    }
}

#[test]
fn dominant_sums_zero_for_all_borels() {
    let systems = [
        (Series::A, 1),
        (Series::A, 4),
        (Series::A, 8),
        (Series::D, 4),
        (Series::D, 6),
        (Series::D, 8),
        (Series::E, 6),
        (Series::E, 7),
        (Series::E, 8),
    ];
    for (s, r) in systems {
        let d = homquiver::dominant_sum_check(&ParabolicData::borel(sys(s, r)));
        assert_eq!(d.len(), 1, "{s}{r}");
        assert!(d.iter().next().unwrap().is_zero());
    }
}

#[test]
fn intersection_numbers_ignore_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = ParabolicData::borel(sys(Series::A, 3));
    let calc = SchubertCalculus::new(&p, DEFAULT_BUDGET).unwrap();
    for e in compositions(6, 3) {
        let base = calc.intersection_number(&e).unwrap();
        let mut order: Vec<usize> = e.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect();
        for _ in 0..10 {
            order.shuffle(&mut rng);
            assert_eq!(calc.intersection_number_ordered(&order).unwrap(), base);
        }
    }
}

#[test]
fn dynkin_reversal_symmetry() {
    for n in 2..=5 {
        let s = sys(Series::A, n);
        for p in all_parabolics(Series::A, n) {
            let mirror: Vec<usize> = p.sigma().iter().map(|&i| n + 1 - i).collect();
            let m = ParabolicData::new(s.clone(), &mirror).unwrap();
            if p.dimension() > 10 {
                continue;
            }
            let (c, cm) = (
                SchubertCalculus::new(&p, DEFAULT_BUDGET).unwrap(),
                SchubertCalculus::new(&m, DEFAULT_BUDGET).unwrap(),
            );
            let k = p.picard_rank();
            for e in compositions(p.dimension() as u32, k) {
                let rev: Vec<u32> = e.iter().rev().copied().collect();
                assert_eq!(c.intersection_number(&e).unwrap(), cm.intersection_number(&rev).unwrap());
            }
        }
    }
}

#[test]
fn euler_identity() {
    for p in all_parabolics(Series::A, 3).into_iter().chain(all_parabolics(Series::A, 4)) {
        let calc = SchubertCalculus::new(&p, DEFAULT_BUDGET).unwrap();
        let k = p.picard_rank();
        let qs = calc.intersection_polynomial(p.dimension() - 1).unwrap();
        let mut lhs = Poly::zero(k);
        for (i, q) in qs.iter().enumerate() {
            lhs = lhs.checked_add(&Poly::var(k, i).checked_mul(q).unwrap()).unwrap();
        }
        assert_eq!(lhs, calc.degree_polynomial().unwrap());
    }
}

#[test]
fn projectivized_cone_is_symmetric() {
    for n in 2..=5 {
        let p = ParabolicData::new(sys(Series::A, n), &[1, n]).unwrap();
        let ineqs = stability_cone(&p).unwrap();
        for h in cube_grid(2, 12) {
            let swapped = vec![h[1], h[0]];
            assert_eq!(cone_membership(&ineqs, &h).unwrap(), cone_membership(&ineqs, &swapped).unwrap());
        }
    }
}

#[test]
fn sigma_and_cone_signs_are_opposite() {
    for p in [
        ParabolicData::new(sys(Series::A, 2), &[1, 2]).unwrap(),
        ParabolicData::new(sys(Series::A, 3), &[1, 3]).unwrap(),
        ParabolicData::borel(sys(Series::A, 3)),
    ] {
        let st = TangentStability::new(&p, DEFAULT_BUDGET).unwrap();
        let k = p.picard_rank();
        for h in cube_grid(k, 4) {
            let sigma = st.sigma(&h).unwrap();
            for s in &st.subsets {
                let poly = st.raw_inequality(s).unwrap();
                let pv = poly.eval(&h.iter().map(|&x| x as i128).collect::<Vec<_>>()).unwrap();
                let sv = sigma.evaluate(s, st.tangent.levi_rep.dims());
                assert_eq!(pv.signum(), -sv.signum());
            }
        }
    }
}

#[test]
fn anticanonical_is_stable() {
    let mut ps: Vec<ParabolicData> = Vec::new();
    for n in 1..=4 {
        ps.extend(all_parabolics(Series::A, n));
    }
    ps.extend(all_parabolics(Series::D, 4));
    for p in ps {
        let st = TangentStability::new(&p, DEFAULT_BUDGET).unwrap();
        let ineqs = st.inequalities().unwrap();
        assert!(st.c1.iter().all(|&c| c > 0));
        assert_eq!(cone_membership(&ineqs, &st.c1).unwrap(), ConeVerdict::Stable, "{:?}", p.sigma());
        assert!(st.king(&st.c1).unwrap().stable);
    }
}

#[test]
fn chern_class_routes_agree() {
    for p in tested().into_iter().chain([ParabolicData::borel(sys(Series::E, 6))]) {
        for c in p.levi_components().unwrap() {
            assert_eq!(c1_picard(&c.weights, &p).unwrap(), c1_irreducible(&p, &c.highest_weight).unwrap());
        }
    }
}

#[test]
fn e6_cominuscule_levi_quiver() {
    // Σ = {1}: g/p is irreducible of rank 16.
    let p = ParabolicData::new(sys(Series::E, 6), &[1]).unwrap();
    let t = tangent_rep(&p).unwrap();
    assert_eq!(t.components.len(), 1);
    assert_eq!(t.components[0].rank, 16);
    assert_eq!(simplicity_report(&p).unwrap().verdict, Verdict::Simple);
}
