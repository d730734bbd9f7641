//! Cross-module invariants on exhaustively enumerated small instances and on
//! seeded random instances.

use proptest::prelude::*;

use polymat::chow;
use polymat::fans::WeightedFan;
use polymat::instances::{enumerate_polymatroids, random_polymatroid, random_sets, seeded};
use polymat::lift::{expand, msym_lift};
use polymat::polytopes::{base_points, independence_points};
use polymat::rado::{hall_rado, rado_matching, SetSequence};
use polymat::realization;
use polymat::{GroundData, GroundMap, Polymatroid, Subset};

fn ground(a: &[u32]) -> GroundData {
    GroundData::new(a.to_vec()).unwrap()
}

/// every ground vector with m <= 2 and entries <= 2, zeros included
fn small_grounds() -> Vec<GroundData> {
    let mut out = Vec::new();
    for a0 in 0..=2u32 {
        out.push(ground(&[a0]));
        for a1 in 0..=2u32 {
            out.push(ground(&[a0, a1]));
        }
    }
    out
}

#[test]
fn dual_involution_and_meet_bound_exhaustive() {
    for g in small_grounds() {
        for p in enumerate_polymatroids(&g) {
            assert_eq!(p.dual().dual(), p);
            for q in enumerate_polymatroids(&g) {
                let met = p.meet(&q).unwrap();
                assert!(met.rank_total() <= p.rank_total().min(q.rank_total()));
                assert_eq!(met.ground(), p.ground());
            }
        }
    }
}

#[test]
fn rado_equivalence_exhaustive() {
    for g in small_grounds() {
        let m = g.m();
        let nonempty: Vec<Subset> = Subset::all(m).filter(|s| !s.is_empty()).collect();
        for p in enumerate_polymatroids(&g) {
            let max_len = p.rank_total() as usize + 1;
            let mut stack: Vec<Vec<Subset>> = vec![vec![]];
            while let Some(sets) = stack.pop() {
                let seq = SetSequence::new(sets.clone(), &g).unwrap();
                assert_eq!(
                    rado_matching(&p, &seq).is_some(),
                    hall_rado(&p, &seq),
                    "table {:?} seq {:?}",
                    p.table(),
                    seq.sets()
                );
                if sets.len() < max_len {
                    for &s in &nonempty {
                        let mut longer = sets.clone();
                        longer.push(s);
                        stack.push(longer);
                    }
                }
            }
        }
    }
}

/// independent oracle for the union: pairwise sums of lattice points,
/// truncated to the type box
fn union_oracle_table(p1: &Polymatroid, p2: &Polymatroid) -> Vec<u32> {
    let g = p1.ground();
    let m = g.m();
    let pts1 = independence_points(p1);
    let pts2 = independence_points(p2);
    let mut sums: Vec<Vec<u32>> = Vec::new();
    for x in &pts1 {
        for y in &pts2 {
            let s: Vec<u32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            if s.iter().enumerate().all(|(i, &v)| v <= g.type_of(i)) {
                sums.push(s);
            }
        }
    }
    Subset::all(m)
        .map(|s| {
            sums.iter()
                .map(|x| s.iter().map(|i| x[i]).sum::<u32>())
                .max()
                .unwrap_or(0)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn union_matches_the_minkowski_oracle(seed in any::<u64>()) {
        let g = ground(&[2, 1, 1]);
        let mut rng = seeded(seed);
        let p1 = random_polymatroid(&g, &mut rng);
        let p2 = random_polymatroid(&g, &mut rng);
        let joined = p1.union(&p2).unwrap();
        prop_assert_eq!(joined.table(), &union_oracle_table(&p1, &p2)[..]);
    }

    #[test]
    fn cap_element_matches_the_slice_oracle(seed in any::<u64>(), elem in 0usize..3, c in 0u32..3) {
        let g = ground(&[2, 2, 1]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        let capped = p.cap_element(elem, c).unwrap();
        let expected: Vec<Vec<u32>> = independence_points(&p)
            .into_iter()
            .filter(|x| x[elem] <= c)
            .collect();
        prop_assert_eq!(independence_points(&capped), expected);
    }

    #[test]
    fn operations_stay_valid_with_the_same_type(seed in any::<u64>()) {
        let g = ground(&[2, 1, 1]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        let q = random_polymatroid(&g, &mut rng);
        for derived in [p.dual(), p.union(&q).unwrap(), p.meet(&q).unwrap(), p.cap_element(0, 1).unwrap()] {
            // re-validate the produced table from scratch
            let raw: Vec<i64> = derived.table().iter().map(|&v| v as i64).collect();
            let again = Polymatroid::validate(g.clone(), &raw).unwrap();
            prop_assert_eq!(&again, &derived);
            prop_assert_eq!(again.ground().type_vector(), g.type_vector());
        }
    }

    #[test]
    fn degree_is_symmetric_and_vanishes_on_violations(seed in any::<u64>()) {
        let g = ground(&[2, 1]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        let r = p.rank_total() as usize;
        let sets = random_sets(2, r, &mut rng);
        let seq = SetSequence::new(sets.clone(), &g).unwrap();
        let d = chow::degree_hr(&p, &seq).unwrap();
        let mut rev = sets.clone();
        rev.reverse();
        let drev = chow::degree_hr(&p, &SetSequence::new(rev, &g).unwrap()).unwrap();
        prop_assert_eq!(d, drev);
        if !hall_rado(&p, &seq) {
            prop_assert_eq!(d, 0);
        }
    }

    #[test]
    fn multiplication_is_compatible_with_meets(seed in any::<u64>(), bits in 1u32..8) {
        let g = ground(&[2, 1, 1]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        if p.rank_total() == 0 {
            return Ok(());
        }
        let s = Subset(bits);
        let product = chow::multiply_by_h(&chow::bergman_class(&p), s).unwrap();
        match Polymatroid::simplicial_generator(&g, s) {
            Ok(h) => {
                let met = p.meet(&h).unwrap();
                if met.rank_total() + 1 == p.rank_total() {
                    prop_assert_eq!(product, chow::bergman_class(&met));
                } else {
                    prop_assert!(product.is_zero());
                }
            }
            Err(_) => prop_assert!(product.is_zero()),
        }
    }

    #[test]
    fn lift_recovery_and_fiber_symmetry(seed in any::<u64>()) {
        let g = ground(&[2, 2]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        let map = GroundMap::of_type(&g).unwrap();
        let lifted = msym_lift(&p, &map).unwrap();
        for s in Subset::all(2) {
            prop_assert_eq!(p.rank(s), lifted.rank(map.preimage(s)));
        }
        // swapping within the second fiber fixes the rank table
        let swap = |s: Subset| {
            let mut out = s.minus(Subset(0b1100));
            if s.contains(2) { out = out.insert(3); }
            if s.contains(3) { out = out.insert(2); }
            out
        };
        for s in Subset::all(4) {
            prop_assert_eq!(lifted.rank(s), lifted.rank(swap(s)));
        }
        // duality commutes with the lift
        prop_assert_eq!(msym_lift(&p.dual(), &map).unwrap(), lifted.dual());
    }

    #[test]
    fn bergman_cones_live_in_the_full_fan(seed in any::<u64>()) {
        let g = ground(&[2, 1]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        let map = GroundMap::of_type(&g).unwrap();
        let fan = WeightedFan::augmented_bergman(&p, &map).unwrap();
        let full = WeightedFan::polystellahedral(&map, None);
        for (label, _) in fan.cones() {
            prop_assert!(full.contains_label(label));
        }
        prop_assert_eq!(fan.dim(), Some(p.rank_total() as usize));
        prop_assert!(fan.is_balanced().unwrap());
    }

    #[test]
    fn expansion_points_are_fiber_preimages(seed in any::<u64>()) {
        let g = ground(&[2, 1]);
        let mut rng = seeded(seed);
        let p = random_polymatroid(&g, &mut rng);
        let map = GroundMap::of_type(&g).unwrap();
        let q = expand(&p, &map).unwrap();
        let pts = independence_points(&q);
        let ppts = independence_points(&p);
        for x in &pts {
            prop_assert!(ppts.contains(&map.push(x)));
        }
        // and the expansion's base points push onto base points
        for x in base_points(&q) {
            prop_assert!(base_points(&p).contains(&map.push(&x)));
        }
    }
}

#[test]
fn degree_routes_agree_exhaustively_and_on_random_samples() {
    // exhaustive on the smallest matroidal ground
    let g = ground(&[1, 1]);
    for p in enumerate_polymatroids(&g) {
        let nonempty: Vec<Subset> = Subset::all(2).filter(|s| !s.is_empty()).collect();
        let mut seqs: Vec<Vec<Subset>> = vec![vec![]];
        for _ in 0..p.rank_total() {
            seqs = seqs
                .iter()
                .flat_map(|s| {
                    nonempty.iter().map(move |&x| {
                        let mut t = s.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        for sets in seqs {
            let seq = SetSequence::new(sets, &g).unwrap();
            assert_eq!(
                chow::degree_hr(&p, &seq).unwrap(),
                chow::degree_cascade(&p, &seq).unwrap()
            );
        }
    }
    // 500 random three-element samples
    let g3 = ground(&[2, 1, 1]);
    let mut rng = seeded(0x0c5);
    for _ in 0..500 {
        let p = random_polymatroid(&g3, &mut rng);
        let sets = random_sets(3, p.rank_total() as usize, &mut rng);
        let seq = SetSequence::new(sets, &g3).unwrap();
        assert_eq!(
            chow::degree_hr(&p, &seq).unwrap(),
            chow::degree_cascade(&p, &seq).unwrap(),
            "table {:?} seq {:?}",
            p.table(),
            seq.sets()
        );
    }
}

#[test]
fn degree_routes_agree_on_grounds_with_type_zero_entries() {
    // sequence sets may be supported on type-zero elements; both routes must
    // still agree
    for g in [ground(&[1, 0]), ground(&[2, 0]), ground(&[0, 2])] {
        let m = g.m();
        let nonempty: Vec<Subset> = Subset::all(m).filter(|s| !s.is_empty()).collect();
        for p in enumerate_polymatroids(&g) {
            let mut seqs: Vec<Vec<Subset>> = vec![vec![]];
            for _ in 0..p.rank_total() {
                seqs = seqs
                    .iter()
                    .flat_map(|s| {
                        nonempty.iter().map(move |&x| {
                            let mut t = s.clone();
                            t.push(x);
                            t
                        })
                    })
                    .collect();
            }
            for sets in seqs {
                let seq = SetSequence::new(sets, &g).unwrap();
                assert_eq!(
                    chow::degree_hr(&p, &seq).unwrap(),
                    chow::degree_cascade(&p, &seq).unwrap(),
                    "type {:?} table {:?} seq {:?}",
                    g.type_vector(),
                    p.table(),
                    seq.sets()
                );
            }
        }
    }
}

#[test]
fn stars_of_balanced_fans_stay_balanced() {
    let g = ground(&[2, 1]);
    let map = GroundMap::of_type(&g).unwrap();
    for p in enumerate_polymatroids(&g) {
        if !p.is_loopless() {
            continue;
        }
        let star = WeightedFan::augmented_bergman(&p, &map)
            .unwrap()
            .star_at_empty_ray(&p)
            .unwrap();
        assert!(star.is_balanced().unwrap(), "table {:?}", p.table());
    }
}

#[test]
fn fans_balance_on_every_small_ground() {
    for g in small_grounds() {
        if g.n() == 0 {
            continue;
        }
        let map = GroundMap::of_type(&g).unwrap();
        for p in enumerate_polymatroids(&g) {
            let fan = WeightedFan::augmented_bergman(&p, &map).unwrap();
            assert_eq!(fan.dim(), Some(p.rank_total() as usize), "table {:?}", p.table());
            assert!(fan.is_pure(), "table {:?}", p.table());
            assert!(fan.is_balanced().unwrap(), "table {:?}", p.table());
        }
    }
}

#[test]
fn matroid_fan_conditions_match_the_independent_set_description() {
    // on an all-ones type the fan pairs must be exactly: an independent set
    // inside the first flat of a chain of proper flats
    let g = ground(&[1, 1, 1]);
    let map = GroundMap::of_type(&g).unwrap();
    for p in enumerate_polymatroids(&g) {
        let fan = WeightedFan::augmented_bergman(&p, &map).unwrap();
        let proper: Vec<Subset> = p
            .flats()
            .flats
            .into_iter()
            .filter(|f| *f != Subset::full(3))
            .collect();
        for (label, _) in fan.cones() {
            assert_eq!(p.rank(label.elems) as usize, label.elems.len());
            let first = label.chain.first().copied().unwrap_or(Subset::full(3));
            assert!(label.elems.is_subset_of(first));
            for f in &label.chain {
                assert!(proper.contains(f));
            }
        }
        // conversely, every pair of that shape appears: compare cardinalities
        let mut expected = 0usize;
        for chain in all_chains(&proper) {
            let first = chain.first().copied().unwrap_or(Subset::full(3));
            for i in Subset::all(3) {
                if p.rank(i) as usize == i.len() && i.is_subset_of(first) {
                    expected += 1;
                }
            }
        }
        assert_eq!(fan.cones().count(), expected, "table {:?}", p.table());
    }
}

fn all_chains(family: &[Subset]) -> Vec<Vec<Subset>> {
    let mut out: Vec<Vec<Subset>> = vec![vec![]];
    let mut frontier: Vec<Vec<Subset>> = family.iter().map(|&f| vec![f]).collect();
    while let Some(chain) = frontier.pop() {
        for &f in family {
            let last = *chain.last().unwrap();
            if last != f && last.is_subset_of(f) {
                let mut longer = chain.clone();
                longer.push(f);
                frontier.push(longer);
            }
        }
        out.push(chain);
    }
    out
}

#[test]
fn point_roundtrip_is_exhaustive_on_small_grounds() {
    for g in small_grounds() {
        for p in enumerate_polymatroids(&g) {
            let back =
                polymat::polytopes::rank_from_points(&independence_points(&p), &g).unwrap();
            assert_eq!(back, p);
        }
    }
}

#[test]
fn greedy_vertices_appear_among_lattice_points() {
    let g = ground(&[2, 1, 1]);
    let orders: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ];
    let mut rng = seeded(0x93ee);
    for _ in 0..40 {
        let p = random_polymatroid(&g, &mut rng);
        let pts = independence_points(&p);
        for order in &orders {
            let mut x = vec![0u32; 3];
            let mut s = Subset::EMPTY;
            for &i in order {
                let prev = p.rank(s);
                s = s.insert(i);
                x[i] = p.rank(s) - prev;
            }
            assert!(pts.contains(&x), "greedy point {x:?} missing for {:?}", p.table());
        }
    }
}

#[test]
fn volume_polynomials_have_bounded_degree_and_nonnegative_coefficients() {
    use num_traits::Signed;
    let g = ground(&[2, 1, 1]);
    let mut rng = seeded(0xb01);
    for _ in 0..60 {
        let p = random_polymatroid(&g, &mut rng);
        let vol = chow::volume_polynomial(&p);
        assert!(vol.total_degree() <= p.rank_total());
        assert!(vol.terms().values().all(|c| !c.is_negative()));
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Polymatroid>();
    assert_send_sync::<GroundData>();
    assert_send_sync::<GroundMap>();
    assert_send_sync::<WeightedFan>();
    assert_send_sync::<polymat::chow::ChowClass>();
    assert_send_sync::<polymat::realization::RealizationMatrix>();
}

#[test]
fn star_of_the_full_fan_has_no_fibers_in_cone_sets() {
    let g = ground(&[2, 1]);
    let map = GroundMap::of_type(&g).unwrap();
    let full = WeightedFan::polystellahedral(&map, None);
    let star = full.star_at_empty_ray(&Polymatroid::boolean(&g)).unwrap();
    for (label, _) in star.cones() {
        for i in 0..2 {
            assert!(
                !map.preimage(Subset::singleton(i)).is_subset_of(label.elems),
                "cone set contains a whole fiber: {label:?}"
            );
        }
        for f in &label.chain {
            assert!(!f.is_empty());
            assert_ne!(*f, Subset::full(2));
        }
    }
}

#[test]
fn generic_column_matroid_refines_to_the_lift() {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::Rng;

    let mut rng = seeded(0x11f7);
    let mut successes = 0usize;
    let mut attempts = 0usize;
    for case in 0..10 {
        let g = ground(&[2, 1]);
        let l = 1 + (case % 3).min(2);
        let mat = match realization::random_realization(&g, l, 1000 + case as u64, 3) {
            Ok(mat) => mat,
            Err(_) => continue,
        };
        let target = msym_lift(&mat.rank_function(), &GroundMap::of_type(&g).unwrap()).unwrap();
        // generic block change of basis; retry a few times since degenerate
        // choices are expected and not counted
        let mut hit = false;
        for _ in 0..6 {
            attempts += 1;
            let blocks: Vec<Vec<Vec<BigRational>>> = [2usize, 1]
                .iter()
                .map(|&size| {
                    (0..size)
                        .map(|_| {
                            (0..size)
                                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5))))
                                .collect()
                        })
                        .collect()
                })
                .collect();
            if let Ok(col) = realization::column_matroid_after_basis_change(&mat, &blocks) {
                if col == target {
                    hit = true;
                    break;
                }
            }
        }
        assert!(hit, "no generic basis change matched the lift for case {case}");
        successes += 1;
    }
    assert!(successes >= 8, "only {successes} cases succeeded over {attempts} attempts");
}
