//! The acceptance battery: every release criterion as a callable check with
//! exact, tolerance-zero comparisons. The CLI `suite` command and the
//! integration suite both run these and print one line per criterion.

use rand::Rng;

use crate::chow;
use crate::error::CoreError;
use crate::fans::{Balance, WeightedFan};
use crate::ground::GroundData;
use crate::instances;
use crate::lift::{self, GroundMap};
use crate::polymatroid::Polymatroid;
use crate::polytopes;
use crate::rado::{self, SetSequence};
use crate::realization;
use crate::subset::Subset;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub trials: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config { seed: 0, trials: 1000 }
    }
}

fn ground(a: &[u32]) -> GroundData {
    GroundData::new(a.to_vec()).expect("battery ground data is valid")
}

/// The full enumeration set shared by most criteria.
fn enumerated() -> Vec<Polymatroid> {
    let mut all = instances::enumerate_polymatroids(&ground(&[2, 1]));
    all.extend(instances::enumerate_polymatroids(&ground(&[2, 2])));
    all
}

fn all_sequences(p: &Polymatroid, len: usize) -> Vec<SetSequence> {
    let m = p.m();
    let nonempty: Vec<Subset> = Subset::all(m).filter(|s| !s.is_empty()).collect();
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for partial in &out {
            for &s in &nonempty {
                let mut longer: Vec<Subset> = partial.clone();
                longer.push(s);
                next.push(longer);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|sets| SetSequence::new(sets, p.ground()).expect("nonempty sets"))
        .collect()
}

/// Criterion 1: the matching-condition degree equals the meet-cascade degree
/// on the full enumeration, for every sequence of rank length.
pub fn hall_rado_vs_cascade() -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        for seq in all_sequences(&p, p.rank_total() as usize) {
            let a = chow::degree_hr(&p, &seq).expect("length matches");
            let b = chow::degree_cascade(&p, &seq).expect("length matches");
            if a != b {
                return fail(1, "hall-rado degree vs meet cascade", format!(
                    "mismatch at table {:?} seq {:?}: {a} vs {b}",
                    p.table(),
                    seq.sets()
                ));
            }
            checked += 1;
        }
    }
    pass(1, "hall-rado degree vs meet cascade", format!("{checked} degree pairs agree"))
}

/// Criterion 2: volume polynomial equals the basis generating function on the
/// enumeration plus seeded random three-element instances.
pub fn volume_equals_egf(cfg: &Config) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut insts = enumerated();
    let g3 = ground(&[2, 1, 1]);
    let mut rng = instances::seeded(cfg.seed ^ 0xe9f);
    for _ in 0..200 {
        insts.push(instances::random_polymatroid(&g3, &mut rng));
    }
    for p in insts {
        let vol = chow::volume_polynomial(&p);
        let egf = chow::basis_egf(&p);
        if vol != egf {
            return fail(2, "volume polynomial vs basis generating function", format!(
                "mismatch at table {:?}: {vol} vs {egf}",
                p.table()
            ));
        }
        checked += 1;
    }
    pass(2, "volume polynomial vs basis generating function", format!("{checked} instances agree"))
}

/// Criterion 3: a matching exists exactly when the matching condition holds.
pub fn rado_matching_iff_condition() -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        for len in 0..=(p.rank_total() as usize + 1) {
            for seq in all_sequences(&p, len) {
                let found = rado::rado_matching(&p, &seq);
                let cond = rado::hall_rado(&p, &seq);
                if found.is_some() != cond {
                    return fail(3, "matching exists iff hall-rado", format!(
                        "table {:?} seq {:?}",
                        p.table(),
                        seq.sets()
                    ));
                }
                if let Some(f) = found {
                    let ok = f.iter().zip(seq.sets()).all(|(&e, s)| s.contains(e));
                    if !ok {
                        return fail(3, "matching exists iff hall-rado", format!(
                            "assignment escapes its sets at {:?}",
                            p.table()
                        ));
                    }
                }
                checked += 1;
            }
        }
    }
    pass(3, "matching exists iff hall-rado", format!("{checked} sequences checked"))
}

/// Criterion 4: the lift's lattice points are the 0/1 points projecting into
/// the independence polytope, and lifting commutes with duality.
pub fn lift_identities() -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        let map = GroundMap::of_type(p.ground()).expect("positive total type");
        let lifted = lift::msym_lift(&p, &map).expect("ground matches");
        let points = polytopes::independence_points(&lifted);
        let n = map.n();
        for bits in 0..1u64 << n {
            let s = Subset(bits as u32);
            let x: Vec<u32> = (0..n).map(|j| u32::from(s.contains(j))).collect();
            let lhs = points.contains(&x);
            let rhs = {
                let pushed = map.push(&x);
                Subset::all(p.m()).all(|t| {
                    t.iter().map(|i| pushed[i]).sum::<u32>() <= p.rank(t)
                })
            };
            if lhs != rhs {
                return fail(4, "lift projection and duality", format!(
                    "projection fails at table {:?} point {x:?}",
                    p.table()
                ));
            }
        }
        if lift::msym_lift(&p.dual(), &map).expect("ground matches") != lifted.dual() {
            return fail(4, "lift projection and duality", format!(
                "duality does not commute at table {:?}",
                p.table()
            ));
        }
        checked += 1;
    }
    pass(4, "lift projection and duality", format!("{checked} instances checked"))
}

/// Criterion 5: fans are pure of dimension `r`, balanced with unit weights,
/// and sampling agrees with the lifted fan's support.
pub fn fan_checks(cfg: &Config) -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        let map = GroundMap::of_type(p.ground()).expect("positive total type");
        let fan = WeightedFan::augmented_bergman(&p, &map).expect("ground matches");
        if fan.dim() != Some(p.rank_total() as usize) || !fan.is_pure() {
            return fail(5, "fan purity, balancing, support sampling", format!(
                "fan of {:?} is not pure of the rank dimension",
                p.table()
            ));
        }
        match fan.balance() {
            Ok(Balance::Balanced) => {}
            other => {
                return fail(5, "fan purity, balancing, support sampling", format!(
                    "fan of {:?} fails balancing: {other:?}",
                    p.table()
                ));
            }
        }
        if !crate::fans::support_equality_sample(&p, &map, cfg.trials, cfg.seed ^ 0x5a).expect("fans build") {
            return fail(5, "fan purity, balancing, support sampling", format!(
                "support mismatch at {:?}",
                p.table()
            ));
        }
        checked += 1;
    }
    pass(5, "fan purity, balancing, support sampling", format!("{checked} fans checked"))
}

/// Criterion 6: the f-polynomial identity for the listed types.
pub fn f_polynomial_identity() -> CriterionOutcome {
    for a in [vec![1u32], vec![2], vec![1, 1], vec![2, 1]] {
        let map = GroundMap::of_type(&ground(&a)).expect("positive total type");
        match crate::fans::hpoly_identity_check(&map) {
            Ok(true) => {}
            other => {
                return fail(6, "f-polynomial identity", format!("type {a:?}: {other:?}"));
            }
        }
    }
    pass(6, "f-polynomial identity", "types (1), (2), (1,1), (2,1)".into())
}

/// Criterion 7: the alternating-sum degree equals the strengthened matching
/// indicator for every loopless enumerated instance.
pub fn dragon_consistency() -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        if !p.is_loopless() || p.rank_total() == 0 {
            continue;
        }
        for seq in all_sequences(&p, p.rank_total() as usize - 1) {
            let deg = chow::dragon_degree(&p, &seq).expect("length matches");
            let cond = chow::dragon_check(&p, &seq).expect("length matches");
            if deg != i64::from(cond) {
                return fail(7, "dragon degree vs dragon condition", format!(
                    "table {:?} seq {:?}: {deg} vs {cond}",
                    p.table(),
                    seq.sets()
                ));
            }
            checked += 1;
        }
    }
    pass(7, "dragon degree vs dragon condition", format!("{checked} sequences agree"))
}

fn legal_splits(p: &Polymatroid) -> Vec<(usize, u32)> {
    let m = p.m();
    let r = p.rank_total();
    let mut out = Vec::new();
    for i in 0..m {
        let low = r - p.rank(Subset::singleton(i).complement_in(m));
        let high = p.rank(Subset::singleton(i));
        for c in low..=high {
            out.push((i, c));
        }
    }
    out
}

/// Criterion 8: split relations vanish on both sides, and both sides agree on
/// seeded random relations built from split compositions.
pub fn valuativity(cfg: &Config) -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        for (i, c) in legal_splits(&p) {
            let (le, ge, eq) = chow::hyperplane_split(&p, i, c).expect("split is legal");
            let terms = vec![(1, p.clone()), (-1, le), (-1, ge), (1, eq)];
            match chow::valuative_check(&terms) {
                Ok((true, true)) => checked += 1,
                other => {
                    return fail(8, "valuativity of split relations", format!(
                        "split ({i},{c}) of {:?}: {other:?}",
                        p.table()
                    ));
                }
            }
        }
    }

    let g3 = ground(&[2, 1, 1]);
    let mut rng = instances::seeded(cfg.seed ^ 0xa11);
    let mut agreements = 0usize;
    for _ in 0..100 {
        let p = instances::random_polymatroid(&g3, &mut rng);
        let splits = legal_splits(&p);
        let mut terms: Vec<(i64, Polymatroid)> = vec![(1, p.clone())];
        if !splits.is_empty() {
            let (i, c) = splits[rng.gen_range(0..splits.len())];
            let (le, ge, eq) = chow::hyperplane_split(&p, i, c).expect("split is legal");
            terms.push((-1, le));
            terms.push((-1, ge.clone()));
            terms.push((1, eq));
            // optionally split a piece again to get a longer relation
            if rng.gen_bool(0.5) {
                let inner = legal_splits(&ge);
                if !inner.is_empty() {
                    let (i2, c2) = inner[rng.gen_range(0..inner.len())];
                    let (le2, ge2, eq2) = chow::hyperplane_split(&ge, i2, c2).expect("split is legal");
                    terms.push((1, ge));
                    terms.push((-1, le2));
                    terms.push((-1, ge2));
                    terms.push((1, eq2));
                }
            }
        }
        // perturb half of the relations so both `false` outcomes are exercised
        if rng.gen_bool(0.5) {
            let at = rng.gen_range(0..terms.len());
            terms[at].0 += 1;
        }
        match chow::valuative_check(&terms) {
            Ok((lhs, rhs)) if lhs == rhs => agreements += 1,
            other => {
                return fail(8, "valuativity of split relations", format!(
                    "sides disagree on a random relation: {other:?}"
                ));
            }
        }
    }
    pass(8, "valuativity of split relations", format!(
        "{checked} split identities vanish, {agreements} random relations agree"
    ))
}

/// Criterion 9: cube slices of expansions are matroids; cells away from the
/// origin drop rank; points are covered; the origin cell is the lift.
pub fn cube_slicing() -> CriterionOutcome {
    let mut checked = 0usize;
    for p in enumerated() {
        let map = GroundMap::of_type(p.ground()).expect("positive total type");
        let q = lift::expand(&p, &map).expect("ground matches");
        let r = q.rank_total();
        let dec = polytopes::cube_slice(&q);
        for cell in &dec.cells {
            if !cell.matroid.is_matroid() {
                return fail(9, "cube slicing", format!("non-matroid cell at {:?}", p.table()));
            }
            if cell.translation.iter().any(|&v| v > 0) && cell.matroid.rank_total() >= r {
                return fail(9, "cube slicing", format!(
                    "translated cell keeps rank {r} at {:?}",
                    p.table()
                ));
            }
        }
        let zero = vec![0u32; map.n()];
        let origin = dec.cells.iter().find(|c| c.translation == zero);
        let lifted = lift::msym_lift(&p, &map).expect("ground matches");
        if origin.map(|c| &c.matroid) != Some(&lifted) {
            return fail(9, "cube slicing", format!("origin cell is not the lift at {:?}", p.table()));
        }
        checked += 1;
    }
    pass(9, "cube slicing", format!("{checked} expansions sliced"))
}

/// Criterion 10: the documented realization reproduces its table and the dual
/// square commutes on seeded random matrices.
pub fn realization_checks(cfg: &Config) -> CriterionOutcome {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let rat = |v: i64| BigRational::from_integer(BigInt::from(v));

    let g = ground(&[2, 1]);
    let mat = realization::RealizationMatrix::new(
        &g,
        vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]],
    )
    .expect("independent rows");
    if mat.rank_function().table() != [0, 2, 1, 2] {
        return fail(10, "realization ranks and dual square", "documented matrix mismatch".into());
    }

    let mut rng = instances::seeded(cfg.seed ^ 0x7ea1);
    let grounds = [vec![2u32, 1], vec![1, 1, 1], vec![2, 2], vec![3, 2, 1], vec![2, 1, 1], vec![1, 1]];
    let mut checked = 0usize;
    for k in 0..100 {
        let a = &grounds[k % grounds.len()];
        let g = ground(a);
        let n = g.n() as usize;
        let l = rng.gen_range(0..=n);
        let seed = rng.gen::<u64>();
        let mat = match realization::random_realization(&g, l, seed, 3) {
            Ok(mat) => mat,
            Err(CoreError::GenerationFailed { .. }) => continue,
            Err(e) => return fail(10, "realization ranks and dual square", format!("{e}")),
        };
        let left = mat.rank_function().dual();
        let right = mat.realize_dual().rank_function();
        if left != right {
            return fail(10, "realization ranks and dual square", format!(
                "dual square broken for type {a:?} seed {seed}"
            ));
        }
        checked += 1;
    }
    pass(10, "realization ranks and dual square", format!("{checked} random matrices commute"))
}

/// Criterion 11: the boolean degree normalization.
pub fn normalization() -> CriterionOutcome {
    for a in [vec![1u32], vec![2], vec![1, 1], vec![2, 1], vec![2, 2], vec![2, 1, 1]] {
        let g = ground(&a);
        let b = Polymatroid::boolean(&g);
        let sets: Vec<Subset> = a
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(Subset::singleton(i), k as usize))
            .collect();
        let seq = SetSequence::new(sets, &g).expect("singletons");
        if chow::degree_hr(&b, &seq) != Ok(1) {
            return fail(11, "boolean degree normalization", format!("type {a:?}"));
        }
    }
    pass(11, "boolean degree normalization", "all tested types pair to one".into())
}

fn pass(id: usize, name: &'static str, detail: String) -> CriterionOutcome {
    CriterionOutcome { id, name, pass: true, detail }
}

fn fail(id: usize, name: &'static str, detail: String) -> CriterionOutcome {
    CriterionOutcome { id, name, pass: false, detail }
}

/// Runs criteria 1 through 11. The CLI adds the golden-file criterion 12 on
/// top, since only the binary can exercise its own surface.
pub fn run_all(cfg: &Config) -> Vec<CriterionOutcome> {
    vec![
        hall_rado_vs_cascade(),
        volume_equals_egf(cfg),
        rado_matching_iff_condition(),
        lift_identities(),
        fan_checks(cfg),
        f_polynomial_identity(),
        dragon_consistency(),
        valuativity(cfg),
        cube_slicing(),
        realization_checks(cfg),
        normalization(),
    ]
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} {:.<46} {} ({})",
            self.id,
            format!("{} ", self.name),
            if self.pass { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}
