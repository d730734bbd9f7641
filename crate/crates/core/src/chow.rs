//! Intersection degrees and homology classes in the pairing-vector model.
//!
//! A class of dimension `k` is stored as its integer pairing against every
//! degree-`k` monomial in the simplicial generators; two classes are equal
//! exactly when the vectors agree. Degrees of generator monomials against a
//! polymatroid class are 0/1 and are computed either directly from the
//! matching condition or through the meet cascade, which gives the two
//! independent routes the test suite compares.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::polymatroid::Polymatroid;
use crate::polytopes;
use crate::rado::{hall_rado, SetSequence};
use crate::subset::Subset;

/// A degree-`k` monomial: a sorted multiset of nonempty subsets of `E`.
pub type HMonomial = Vec<Subset>;

/// All degree-`k` monomials over the nonempty subsets of an `m`-element
/// ground set, in ascending lexicographic order.
pub fn h_monomials(m: usize, k: usize) -> Vec<HMonomial> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, min: u32, cur: &mut Vec<Subset>, out: &mut Vec<HMonomial>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for bits in min..(1u32 << m) {
            cur.push(Subset(bits));
            rec(m, k, bits, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 1, &mut cur, &mut out);
    out
}

/// A homology class of dimension `k`, as its pairing vector against
/// `h_monomials(m, k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChowClass {
    m: usize,
    dim: usize,
    pairing: Vec<i64>,
}

impl ChowClass {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn pairing(&self) -> &[i64] {
        &self.pairing
    }

    pub fn pairing_at(&self, monomial: &HMonomial) -> Option<i64> {
        let sorted = {
            let mut v = monomial.clone();
            v.sort();
            v
        };
        h_monomials(self.m, self.dim)
            .binary_search(&sorted)
            .ok()
            .map(|i| self.pairing[i])
    }

    pub fn is_zero(&self) -> bool {
        self.pairing.iter().all(|&v| v == 0)
    }
}

/// `1` iff the sequence pairs to a point against the class of `p`: the
/// matching-condition route. The sequence length must equal the rank.
pub fn degree_hr(p: &Polymatroid, seq: &SetSequence) -> Result<i64, CoreError> {
    let r = p.rank_total() as usize;
    if seq.len() != r {
        return Err(CoreError::LengthMismatch { expected: r, got: seq.len() });
    }
    Ok(i64::from(hall_rado(p, seq)))
}

/// The same degree computed by iterated meets with simplicial generators,
/// checking that the rank drops by exactly one at each step.
pub fn degree_cascade(p: &Polymatroid, seq: &SetSequence) -> Result<i64, CoreError> {
    let r = p.rank_total() as usize;
    if seq.len() != r {
        return Err(CoreError::LengthMismatch { expected: r, got: seq.len() });
    }
    let mut q = p.clone();
    for &s in seq.sets() {
        let h = match Polymatroid::simplicial_generator(p.ground(), s) {
            Ok(h) => h,
            // a set supported entirely on type-zero elements pairs to zero
            Err(CoreError::EmptySubset) => return Ok(0),
            Err(e) => return Err(e),
        };
        let next = q.meet(&h)?;
        if next.rank_total() + 1 != q.rank_total() {
            return Ok(0);
        }
        q = next;
    }
    debug_assert_eq!(q.rank_total(), 0);
    Ok(1)
}

/// The class of `p`: dimension `r`, pairing every degree-`r` monomial by the
/// matching-condition degree.
pub fn bergman_class(p: &Polymatroid) -> ChowClass {
    let m = p.m();
    let dim = p.rank_total() as usize;
    let pairing = h_monomials(m, dim)
        .into_iter()
        .map(|mono| {
            let seq = SetSequence::new(mono, p.ground()).expect("monomial sets are nonempty");
            degree_hr(p, &seq).expect("monomial degree matches rank")
        })
        .collect();
    ChowClass { m, dim, pairing }
}

/// Cap product with one simplicial generator: the new pairing reads the old
/// one at the monomial enlarged by `s`.
pub fn multiply_by_h(class: &ChowClass, s: Subset) -> Result<ChowClass, CoreError> {
    if class.dim == 0 {
        return Err(CoreError::DimensionUnderflow);
    }
    if s.is_empty() {
        return Err(CoreError::EmptySubset);
    }
    if !s.is_subset_of(Subset::full(class.m)) {
        return Err(CoreError::UnknownElement { element: s.iter().last().unwrap() });
    }
    let parent = h_monomials(class.m, class.dim);
    let pairing = h_monomials(class.m, class.dim - 1)
        .into_iter()
        .map(|mut mono| {
            mono.push(s);
            mono.sort();
            let at = parent.binary_search(&mono).expect("enlarged monomial exists");
            class.pairing[at]
        })
        .collect();
    Ok(ChowClass { m: class.m, dim: class.dim - 1, pairing })
}

/// Pointwise integer combination of pairing vectors.
pub fn class_combine(terms: &[(i64, ChowClass)]) -> Result<ChowClass, CoreError> {
    let Some(((_, first), rest)) = terms.split_first() else {
        return Err(CoreError::EmptyCombination);
    };
    if rest.iter().any(|(_, c)| c.m != first.m || c.dim != first.dim) {
        return Err(CoreError::MixedDimensions);
    }
    let mut pairing = vec![0i64; first.pairing.len()];
    for (c, class) in terms {
        for (acc, v) in pairing.iter_mut().zip(&class.pairing) {
            *acc += c * v;
        }
    }
    Ok(ChowClass { m: first.m, dim: first.dim, pairing })
}

/// Multivariate polynomial in `t_1 .. t_m` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VolumePoly {
    m: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl VolumePoly {
    fn new(m: usize, terms: BTreeMap<Vec<u32>, BigRational>) -> VolumePoly {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        VolumePoly { m, terms }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|u| u.iter().sum()).max().unwrap_or(0)
    }
}

impl std::fmt::Display for VolumePoly {
    /// Renders like `1/2*t1^2 + t1*t2`, terms in descending lexicographic
    /// exponent order, unit coefficients and unit exponents omitted.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (u, c)) in self.terms.iter().rev().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            let constant = u.iter().all(|&e| e == 0);
            let unit = c.is_one();
            if constant || !unit {
                if c.denom().is_one() {
                    write!(f, "{}", c.numer())?;
                } else {
                    write!(f, "{}/{}", c.numer(), c.denom())?;
                }
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in u.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "t{}", i + 1)?;
                } else {
                    write!(f, "t{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

fn factorial(mut n: u32) -> BigInt {
    let mut out = BigInt::one();
    while n > 1 {
        out *= n;
        n -= 1;
    }
    out
}

fn multidegrees(m: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if m == 0 {
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// Volume polynomial via the meet cascade: the coefficient of `t^u / u!` is
/// the degree of the singleton sequence with `u_i` copies of element `i`.
/// Iterating multidegrees is enough because the degree of a singleton
/// sequence depends only on the multidegree.
pub fn volume_polynomial(p: &Polymatroid) -> VolumePoly {
    let m = p.m();
    let r = p.rank_total();
    let mut terms = BTreeMap::new();
    for u in multidegrees(m, r) {
        let sets: Vec<Subset> = u
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(Subset::singleton(i), e as usize))
            .collect();
        let seq = SetSequence::new(sets, p.ground()).expect("singletons are nonempty");
        let d = degree_cascade(p, &seq).expect("sequence length matches rank");
        if d != 0 {
            let coeff = BigRational::new(
                BigInt::from(d),
                u.iter().map(|&e| factorial(e)).product::<BigInt>(),
            );
            terms.insert(u, coeff);
        }
    }
    VolumePoly::new(m, terms)
}

/// Exponential generating function over the base lattice points.
pub fn basis_egf(p: &Polymatroid) -> VolumePoly {
    let m = p.m();
    let mut terms = BTreeMap::new();
    for u in polytopes::base_points(p) {
        let coeff = BigRational::new(
            BigInt::one(),
            u.iter().map(|&e| factorial(e)).product::<BigInt>(),
        );
        terms.insert(u, coeff);
    }
    VolumePoly::new(m, terms)
}

/// Slices the base polytope along `x_i = c`, returning the polymatroids of
/// the two closed sides and of the slice itself. Their indicator functions
/// satisfy `lower + upper - slice = whole` on all of space.
pub fn hyperplane_split(
    p: &Polymatroid,
    i: usize,
    c: u32,
) -> Result<(Polymatroid, Polymatroid, Polymatroid), CoreError> {
    if i >= p.m() {
        return Err(CoreError::UnknownElement { element: i });
    }
    let m = p.m();
    let r = p.rank_total();
    let low = r - p.rank(Subset::singleton(i).complement_in(m));
    let high = p.rank(Subset::singleton(i));
    if c < low || c > high {
        return Err(CoreError::SplitOutOfRange { low, high, got: c });
    }
    let q_le = p.cap_element(i, c)?;
    let q_ge = p.dual().cap_element(i, p.ground().type_of(i) - c)?.dual();
    let table: Vec<i64> = Subset::all(m)
        .map(|s| {
            q_le.rank(s.insert(i)) as i64 - if s.contains(i) { 0 } else { c as i64 }
        })
        .collect();
    let q_eq = Polymatroid::validate(p.ground().clone(), &table)?;
    Ok((q_le, q_ge, q_eq))
}

/// Largest absolute determinant of a 0/1 matrix of the given size; used to
/// bound the denominators of arrangement vertices.
fn max_zero_one_det(m: usize) -> Option<u64> {
    const TABLE: [u64; 12] = [1, 1, 2, 3, 5, 9, 32, 56, 144, 320, 1458, 3645];
    TABLE.get(m.checked_sub(1)?).copied()
}

/// Decides whether an integer combination of base-polytope indicators is the
/// zero function. Every piece of the arrangement cut out by the facet
/// hyperplanes (all of which have 0/1 normals and integer offsets) contains a
/// rational point whose denominator divides `max det * lcm(1..=m+1)`, so
/// scanning that grid inside the type box decides the identity exactly.
pub fn indicator_combination_vanishes(terms: &[(i64, Polymatroid)]) -> Result<bool, CoreError> {
    let Some(((_, first), rest)) = terms.split_first() else {
        return Ok(true);
    };
    if rest.iter().any(|(_, p)| p.ground() != first.ground()) {
        return Err(CoreError::GroundMismatch);
    }
    if rest.iter().any(|(_, p)| p.rank_total() != first.rank_total()) {
        return Err(CoreError::MixedDimensions);
    }
    let m = first.m();
    let r = first.rank_total() as u64;
    let mut lcm = 1u64;
    for k in 2..=(m as u64 + 1) {
        lcm = num_integer::lcm(lcm, k);
    }
    let det = max_zero_one_det(m)
        .ok_or(CoreError::GroundTooLarge { m, cap: 12 })?;
    let q = det * lcm;
    let bounds: Vec<u64> = first.ground().type_vector().iter().map(|&a| a as u64 * q).collect();
    let target = r * q;

    let mut y = vec![0u64; m];
    fn scan(
        i: usize,
        left: u64,
        bounds: &[u64],
        y: &mut Vec<u64>,
        terms: &[(i64, Polymatroid)],
        q: u64,
    ) -> bool {
        if i + 1 == bounds.len() {
            if left > bounds[i] {
                return true;
            }
            y[i] = left;
            let mut total = 0i64;
            for (c, p) in terms {
                let inside = Subset::all(p.m()).all(|s| {
                    let sum: u64 = s.iter().map(|j| y[j]).sum();
                    sum <= p.rank(s) as u64 * q
                });
                if inside {
                    total += c;
                }
            }
            return total == 0;
        }
        let cap = bounds[i].min(left);
        for v in 0..=cap {
            y[i] = v;
            if !scan(i + 1, left - v, bounds, y, terms, q) {
                return false;
            }
        }
        true
    }
    Ok(scan(0, target, &bounds, &mut y, terms, q))
}

/// Compares the two sides of the valuativity correspondence on one integer
/// relation: vanishing of the class combination and vanishing of the
/// indicator combination.
pub fn valuative_check(terms: &[(i64, Polymatroid)]) -> Result<(bool, bool), CoreError> {
    let Some(((_, first), rest)) = terms.split_first() else {
        return Ok((true, true));
    };
    if rest.iter().any(|(_, p)| p.ground() != first.ground()) {
        return Err(CoreError::GroundMismatch);
    }
    if rest.iter().any(|(_, p)| p.rank_total() != first.rank_total()) {
        return Err(CoreError::MixedDimensions);
    }
    let classes: Vec<(i64, ChowClass)> =
        terms.iter().map(|(c, p)| (*c, bergman_class(p))).collect();
    let lhs_zero = class_combine(&classes)?.is_zero();
    let rhs_zero = indicator_combination_vanishes(terms)?;
    Ok((lhs_zero, rhs_zero))
}

/// The alternating sum of matching-condition degrees over all nonempty last
/// sets, for a sequence one shorter than the rank.
pub fn dragon_degree(p: &Polymatroid, seq: &SetSequence) -> Result<i64, CoreError> {
    let r = p.rank_total() as usize;
    if r == 0 || seq.len() + 1 != r {
        return Err(CoreError::LengthMismatch { expected: r.saturating_sub(1), got: seq.len() });
    }
    let m = p.m();
    let mut total = 0i64;
    for s in Subset::all(m).filter(|s| !s.is_empty()) {
        let mut sets = seq.sets().to_vec();
        sets.push(s);
        let extended = SetSequence::new(sets, p.ground())?;
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        total += sign * degree_hr(p, &extended)?;
    }
    Ok(-total)
}

/// The strengthened matching condition: every nonempty index set needs rank
/// at least one more than its size.
pub fn dragon_check(p: &Polymatroid, seq: &SetSequence) -> Result<bool, CoreError> {
    let r = p.rank_total() as usize;
    if r == 0 || seq.len() + 1 != r {
        return Err(CoreError::LengthMismatch { expected: r.saturating_sub(1), got: seq.len() });
    }
    let k = seq.len();
    for mask in 1..1u64 << k {
        let mut union = Subset::EMPTY;
        for (j, &s) in seq.sets().iter().enumerate() {
            if mask >> j & 1 == 1 {
                union = union.union(s);
            }
        }
        if (p.rank(union) as u64) < mask.count_ones() as u64 + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
