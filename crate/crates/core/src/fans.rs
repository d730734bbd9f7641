//! Weighted simplicial fans on the blown-up ground set: the complete
//! compatible-pair fan of a ground map, augmented Bergman subfans, stars at
//! the all-negative ray, balancing checks, and f-polynomials.
//!
//! Fans are stored as label sets. A label holds a subset `I` of `EE` and a
//! strictly increasing chain of proper subsets of `E`; its cone is spanned by
//! the unit vectors of `I` and the vectors `-e_{EE \ preimage(F)}` over the
//! chain. Ray matrices are derived on demand.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CoreError;
use crate::lift::GroundMap;
use crate::linalg;
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// Label of a simplicial cone: generators `e_j` for `j` in `elems` and one
/// negative indicator vector per chain entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ConeLabel {
    pub elems: Subset,
    pub chain: Vec<Subset>,
}

impl ConeLabel {
    pub fn dim(&self) -> usize {
        self.elems.len() + self.chain.len()
    }

    /// Faces are sub-pairs: a subset of the elements and a subchain.
    pub fn is_face_of(&self, other: &ConeLabel) -> bool {
        self.elems.is_subset_of(other.elems)
            && self.chain.iter().all(|f| other.chain.contains(f))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Balance {
    Balanced,
    Unbalanced { witness: ConeLabel },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedFan {
    map: GroundMap,
    quotient: bool,
    cones: BTreeMap<ConeLabel, u32>,
}

impl WeightedFan {
    /// The complete fan of all compatible pairs for the ground map: a pair is
    /// compatible when every element of `E` whose whole fiber lies in `I`
    /// belongs to the first chain entry.
    pub fn polystellahedral(map: &GroundMap, up_to_dim: Option<usize>) -> WeightedFan {
        let m = map.base().m();
        let n = map.n();
        let mut cones = BTreeMap::new();
        for chain in chains_of(&proper_subsets(m)) {
            let first = chain.first().copied().unwrap_or(Subset::full(m));
            for elems in Subset::all(n) {
                if let Some(bound) = up_to_dim {
                    if elems.len() + chain.len() > bound {
                        continue;
                    }
                }
                let compatible = (0..m)
                    .all(|w| first.contains(w) || !map.preimage(Subset::singleton(w)).is_subset_of(elems));
                if compatible {
                    cones.insert(ConeLabel { elems, chain: chain.clone() }, 1);
                }
            }
        }
        WeightedFan { map: map.clone(), quotient: false, cones }
    }

    /// The augmented Bergman fan: pairs of a subset `S` of `EE` and a chain of
    /// proper flats such that
    /// (1) every `T` inside `S` has `rk(image(T)) >= |T|`, and
    /// (2) for every chain flat `F` and nonempty `T` inside `S \ preimage(F)`,
    ///     `rk(F + image(T)) > rk(F) + |T|`.
    /// All weights are one.
    pub fn augmented_bergman(p: &Polymatroid, map: &GroundMap) -> Result<WeightedFan, CoreError> {
        if p.ground() != map.base() {
            return Err(CoreError::GroundMismatch);
        }
        let n = map.n();
        let size = 1usize << n;

        let mut ok1 = vec![false; size];
        ok1[0] = true;
        for bits in 1..size {
            let s = Subset(bits as u32);
            let hereditary = s.iter().all(|j| ok1[s.remove(j).index()]);
            ok1[bits] = hereditary && p.rank(map.image(s)) as usize >= s.len();
        }

        let proper_flats: Vec<Subset> =
            p.flats().flats.into_iter().filter(|f| *f != Subset::full(p.m())).collect();

        // per flat: bad[S] says some nonempty T inside S (already disjoint
        // from the fiber of the flat) violates condition (2)
        let mut bad: BTreeMap<Subset, Vec<bool>> = BTreeMap::new();
        for &f in &proper_flats {
            let outside = map.preimage(f).complement_in(n);
            let mut table = vec![false; size];
            for bits in 1..size {
                let s = Subset(bits as u32);
                if !s.is_subset_of(outside) {
                    continue;
                }
                let direct =
                    p.rank(f.union(map.image(s))) <= p.rank(f) + s.len() as u32;
                table[bits] = direct || s.iter().any(|j| table[s.remove(j).index()]);
            }
            bad.insert(f, table);
        }

        let mut cones = BTreeMap::new();
        for chain in chains_of(&proper_flats) {
            for elems in Subset::all(n) {
                if !ok1[elems.index()] {
                    continue;
                }
                let ok = chain.iter().all(|f| {
                    let rest = elems.minus(map.preimage(*f));
                    !bad[f][rest.index()]
                });
                if ok {
                    cones.insert(ConeLabel { elems, chain: chain.clone() }, 1);
                }
            }
        }
        Ok(WeightedFan { map: map.clone(), quotient: false, cones })
    }

    pub fn map(&self) -> &GroundMap {
        &self.map
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient
    }

    pub fn cones(&self) -> impl Iterator<Item = (&ConeLabel, u32)> {
        self.cones.iter().map(|(c, &w)| (c, w))
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn contains_label(&self, label: &ConeLabel) -> bool {
        self.cones.contains_key(label)
    }

    pub fn remove_label(&mut self, label: &ConeLabel) {
        self.cones.remove(label);
    }

    /// Dimension of the largest cone; `None` for the empty fan.
    pub fn dim(&self) -> Option<usize> {
        self.cones.keys().map(ConeLabel::dim).max()
    }

    pub fn maximal_cones(&self) -> Vec<&ConeLabel> {
        self.cones
            .keys()
            .filter(|c| !self.cones.keys().any(|d| d != *c && c.is_face_of(d)))
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let Some(d) = self.dim() else {
            return true;
        };
        self.maximal_cones().iter().all(|c| c.dim() == d)
    }

    /// The primitive generator attached to one chain entry.
    fn chain_ray(&self, f: Subset) -> Vec<i64> {
        let n = self.map.n();
        let pre = self.map.preimage(f);
        (0..n).map(|j| if pre.contains(j) { 0 } else { -1 }).collect()
    }

    fn unit_ray(&self, j: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.map.n()];
        v[j] = 1;
        v
    }

    fn ray_rows(&self, label: &ConeLabel) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = label
            .elems
            .iter()
            .map(|j| self.unit_ray(j).into_iter().map(BigInt::from).collect())
            .collect();
        for &f in &label.chain {
            rows.push(self.chain_ray(f).into_iter().map(BigInt::from).collect());
        }
        if self.quotient {
            rows.push(vec![BigInt::from(1); self.map.n()]);
        }
        rows
    }

    /// Checks the weighted balancing condition at every codimension-one cone:
    /// the weighted sum of the opposite rays must lie in the linear span of
    /// the cone. Requires a pure fan.
    pub fn balance(&self) -> Result<Balance, CoreError> {
        if !self.is_pure() {
            return Err(CoreError::NotPure);
        }
        let Some(d) = self.dim() else {
            return Ok(Balance::Balanced);
        };
        if d == 0 {
            return Ok(Balance::Balanced);
        }
        let n = self.map.n();
        let mut sums: BTreeMap<&ConeLabel, Vec<i64>> = BTreeMap::new();
        for (tau, _) in self.cones.iter().filter(|(c, _)| c.dim() + 1 == d) {
            sums.insert(tau, vec![0i64; n]);
        }
        for (sigma, &w) in self.cones.iter().filter(|(c, _)| c.dim() == d) {
            for j in sigma.elems.iter() {
                let tau = ConeLabel { elems: sigma.elems.remove(j), chain: sigma.chain.clone() };
                if let Some(acc) = sums.get_mut(&tau) {
                    for (a, b) in acc.iter_mut().zip(self.unit_ray(j)) {
                        *a += w as i64 * b;
                    }
                }
            }
            for (pos, &f) in sigma.chain.iter().enumerate() {
                let mut chain = sigma.chain.clone();
                chain.remove(pos);
                let tau = ConeLabel { elems: sigma.elems, chain };
                if let Some(acc) = sums.get_mut(&tau) {
                    for (a, b) in acc.iter_mut().zip(self.chain_ray(f)) {
                        *a += w as i64 * b;
                    }
                }
            }
        }
        for (tau, sum) in sums {
            let rows = self.ray_rows(tau);
            let v: Vec<BigInt> = sum.into_iter().map(BigInt::from).collect();
            if !linalg::in_integer_span(&rows, &v) {
                return Ok(Balance::Unbalanced { witness: tau.clone() });
            }
        }
        Ok(Balance::Balanced)
    }

    pub fn is_balanced(&self) -> Result<bool, CoreError> {
        Ok(self.balance()? == Balance::Balanced)
    }

    /// The star at the ray of the empty set: cones whose chain starts at the
    /// empty set, re-expressed in the quotient by the all-negative ray.
    /// Requires the underlying polymatroid to be loopless, since otherwise
    /// that ray is missing from the fan.
    pub fn star_at_empty_ray(&self, p: &Polymatroid) -> Result<WeightedFan, CoreError> {
        if !p.is_loopless() {
            return Err(CoreError::LoopyPolymatroid);
        }
        let cones = self
            .cones
            .iter()
            .filter(|(c, _)| c.chain.first() == Some(&Subset::EMPTY))
            .map(|(c, &w)| (ConeLabel { elems: c.elems, chain: c.chain[1..].to_vec() }, w))
            .collect();
        Ok(WeightedFan { map: self.map.clone(), quotient: true, cones })
    }

    /// Coefficient `k` counts the `k`-dimensional cones.
    pub fn f_polynomial(&self) -> FPoly {
        let mut coeffs = vec![0i64; self.dim().map_or(0, |d| d + 1)];
        for c in self.cones.keys() {
            coeffs[c.dim()] += 1;
        }
        FPoly::new(coeffs)
    }

    /// Support membership for a rational point, decided cone by cone in
    /// closed form: the chain generators are triangular with respect to the
    /// levels of the chain, so feasibility reduces to matching the forced
    /// partial sums and checking monotonicity.
    pub fn contains_point(&self, x: &[Ratio<i64>]) -> bool {
        debug_assert!(!self.quotient, "membership is defined in the full ambient space");
        self.maximal_cones().iter().any(|c| self.cone_contains(c, x))
    }

    fn cone_contains(&self, label: &ConeLabel, x: &[Ratio<i64>]) -> bool {
        let k = label.chain.len();
        let m = self.map.base().m();
        // level(j): first chain entry containing the image of j, with the
        // implicit full set at level k+1
        let level = |j: usize| -> usize {
            let i = self.map.image_of(j);
            debug_assert!(i < m);
            label
                .chain
                .iter()
                .position(|f| f.contains(i))
                .map_or(k + 1, |p| p + 1)
        };
        let zero = Ratio::zero();
        // forced values of T_s = mu_1 + .. + mu_{s-1}
        let mut forced: Vec<Option<Ratio<i64>>> = vec![None; k + 2];
        forced[1] = Some(zero);
        for (j, &xj) in x.iter().enumerate() {
            if label.elems.contains(j) {
                continue;
            }
            let s = level(j);
            let value = -xj;
            match &forced[s] {
                Some(v) if *v != value => return false,
                Some(_) => {}
                None => forced[s] = Some(value),
            }
        }
        let mut last = None;
        for v in forced.iter().flatten() {
            if let Some(prev) = last {
                if *v < prev {
                    return false;
                }
            }
            last = Some(*v);
        }
        for j in label.elems.iter() {
            let s = level(j);
            let cap = (s..=k + 1).find_map(|t| forced[t]);
            if let Some(cap) = cap {
                if x[j] + cap < zero {
                    return false;
                }
            }
        }
        true
    }
}

/// All strictly increasing chains (including the empty one) drawn from the
/// given inclusion-ordered family.
fn chains_of(family: &[Subset]) -> Vec<Vec<Subset>> {
    let mut sorted = family.to_vec();
    sorted.sort_by_key(|s| (s.len(), s.0));
    let mut out = vec![vec![]];
    let mut stack: Vec<Vec<Subset>> = sorted.iter().map(|&s| vec![s]).collect();
    while let Some(chain) = stack.pop() {
        for &next in &sorted {
            if chain.last().unwrap().is_subset_of(next) && *chain.last().unwrap() != next {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
        out.push(chain);
    }
    out.sort();
    out
}

fn proper_subsets(m: usize) -> Vec<Subset> {
    Subset::all(m).filter(|s| *s != Subset::full(m)).collect()
}

/// Integer polynomial with `coeff[k]` counting `k`-dimensional cones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FPoly {
    coeffs: Vec<i64>,
}

impl FPoly {
    pub fn new(mut coeffs: Vec<i64>) -> FPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn zero() -> FPoly {
        FPoly { coeffs: vec![] }
    }

    pub fn one() -> FPoly {
        FPoly { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        FPoly::new(coeffs)
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return FPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        FPoly::new(coeffs)
    }

    /// `(1 + t)^k`
    pub fn one_plus_t_power(k: usize) -> FPoly {
        let mut p = FPoly::one();
        let lin = FPoly::new(vec![1, 1]);
        for _ in 0..k {
            p = p.mul(&lin);
        }
        p
    }

    pub fn times_t(&self) -> FPoly {
        if self.coeffs.is_empty() {
            return FPoly::zero();
        }
        let mut coeffs = vec![0i64];
        coeffs.extend_from_slice(&self.coeffs);
        FPoly::new(coeffs)
    }
}

impl std::fmt::Display for FPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if *c == 1 => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if *c == 1 => write!(f, "t^{k}")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The f-polynomial identity tying the full fan to the stars of its
/// restrictions: `f(full)` equals `(1+t)^n` plus, over every proper subset
/// `J` of `E` (the empty set included), `t (1+t)^{|preimage(J)|}` times the
/// f-polynomial of the star fan of the type restricted to `E \ J`.
/// Restrictions containing a type-zero entry contribute nothing.
pub fn hpoly_identity_check(map: &GroundMap) -> Result<bool, CoreError> {
    let base = map.base();
    let m = base.m();
    let n = map.n();
    let lhs = WeightedFan::polystellahedral(map, None).f_polynomial();
    let mut rhs = FPoly::one_plus_t_power(n);
    for j in Subset::all(m).filter(|j| *j != Subset::full(m)) {
        let rest: Vec<u32> = (0..m).filter(|i| !j.contains(*i)).map(|i| base.type_of(i)).collect();
        if rest.contains(&0) {
            continue;
        }
        let rest_ground = crate::ground::GroundData::new(rest)?;
        let rest_map = GroundMap::of_type(&rest_ground)?;
        let star = WeightedFan::polystellahedral(&rest_map, None)
            .star_at_empty_ray(&Polymatroid::boolean(&rest_ground))?;
        let factor = FPoly::one_plus_t_power(map.preimage(j).len());
        rhs = rhs.add(&factor.mul(&star.f_polynomial()).times_t());
    }
    Ok(lhs == rhs)
}

/// Samples rational points from a symmetric box and compares membership in
/// the fan of `p` against the fan of its lift over the identity map.
pub fn support_equality_sample(
    p: &Polymatroid,
    map: &GroundMap,
    trials: usize,
    seed: u64,
) -> Result<bool, CoreError> {
    let fan = WeightedFan::augmented_bergman(p, map)?;
    let lifted = crate::lift::msym_lift(p, map)?;
    let id = GroundMap::identity(map.n())?;
    let lift_fan = WeightedFan::augmented_bergman(&lifted, &id)?;
    Ok(supports_agree_on_samples(&fan, &lift_fan, trials, seed))
}

/// True iff membership agrees for every sampled point.
pub fn supports_agree_on_samples(a: &WeightedFan, b: &WeightedFan, trials: usize, seed: u64) -> bool {
    debug_assert_eq!(a.map().n(), b.map().n());
    let n = a.map().n();
    let max_a = a.maximal_cones();
    let max_b = b.maximal_cones();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x: Vec<Ratio<i64>> = (0..n)
            .map(|_| {
                let den = rng.gen_range(1i64..=4);
                let num = rng.gen_range(-3 * den..=3 * den);
                Ratio::new(num, den)
            })
            .collect();
        let in_a = max_a.iter().any(|c| a.cone_contains(c, &x));
        let in_b = max_b.iter().any(|c| b.cone_contains(c, &x));
        if in_a != in_b {
            return false;
        }
    }
    true
}
