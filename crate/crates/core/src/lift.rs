//! Expansion and multisymmetric lift between a ground set `E` and its blown-up
//! ground set `EE`, plus geometric-flat bookkeeping on the lift.
//!
//! `EE` is always `{0, .., n-1}` with the fibers of the projection laid out
//! consecutively: the fiber over element `i` occupies the block of size `a_i`
//! starting at `a_0 + .. + a_{i-1}`. This fixes the bitmask convention for
//! every lifted rank table.

use crate::error::CoreError;
use crate::ground::GroundData;
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// The projection `EE -> E` of a given type, with fiber bookkeeping.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroundMap {
    base: GroundData,
    lifted: GroundData,
    fiber: Vec<Subset>,
    image_of: Vec<usize>,
}

impl GroundMap {
    /// The map of the ground's type with consecutive fibers.
    pub fn of_type(base: &GroundData) -> Result<GroundMap, CoreError> {
        GroundMap::of_type_with_cap(base, crate::ground::DEFAULT_GROUND_CAP)
    }

    /// Same, with an explicit cap on the blown-up ground size.
    pub fn of_type_with_cap(base: &GroundData, cap: usize) -> Result<GroundMap, CoreError> {
        let n = base.n() as usize;
        if n == 0 {
            return Err(CoreError::EmptyLiftedGround);
        }
        let lifted = GroundData::with_cap(vec![1; n], cap)?;
        let mut fiber = Vec::with_capacity(base.m());
        let mut image_of = Vec::with_capacity(n);
        let mut offset = 0usize;
        for i in 0..base.m() {
            let size = base.type_of(i) as usize;
            let mut f = Subset::EMPTY;
            for j in offset..offset + size {
                f = f.insert(j);
                image_of.push(i);
            }
            fiber.push(f);
            offset += size;
        }
        Ok(GroundMap { base: base.clone(), lifted, fiber, image_of })
    }

    /// The identity map on `{0, .., n-1}`, used to treat a matroid on `EE` as
    /// a polymatroid of type `(1, .., 1)` over itself.
    pub fn identity(n: usize) -> Result<GroundMap, CoreError> {
        let base = GroundData::new(vec![1; n])?;
        GroundMap::of_type(&base)
    }

    pub fn base(&self) -> &GroundData {
        &self.base
    }

    /// Ground data of `EE`: `n` elements, all of type one.
    pub fn lifted(&self) -> &GroundData {
        &self.lifted
    }

    pub fn n(&self) -> usize {
        self.image_of.len()
    }

    pub fn fiber(&self, i: usize) -> Subset {
        self.fiber[i]
    }

    pub fn image_of(&self, j: usize) -> usize {
        self.image_of[j]
    }

    /// Image in `E` of a subset of `EE`.
    pub fn image(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, j| acc.insert(self.image_of[j]))
    }

    /// Preimage in `EE` of a subset of `E`.
    pub fn preimage(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, i| acc.union(self.fiber[i]))
    }

    /// The linear pushforward summing coordinates over fibers.
    pub fn push(&self, x: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.base.m()];
        for (j, &v) in x.iter().enumerate() {
            out[self.image_of[j]] += v;
        }
        out
    }
}

/// Expansion: `rk(S) = rk_P(image(S))`. The declared type vector on `EE` is
/// the tightest valid one, `(rk_P(image(j)))_j`.
pub fn expand(p: &Polymatroid, map: &GroundMap) -> Result<Polymatroid, CoreError> {
    if p.ground() != map.base() {
        return Err(CoreError::GroundMismatch);
    }
    let n = map.n();
    let a: Vec<u32> = (0..n).map(|j| p.rank(Subset::singleton(map.image_of(j)))).collect();
    let ground = GroundData::with_cap(a, crate::ground::DEFAULT_GROUND_CAP)?;
    let table: Vec<i64> = Subset::all(n).map(|s| p.rank(map.image(s)) as i64).collect();
    Ok(Polymatroid::validate(ground, &table).expect("expansion table is valid"))
}

/// Multisymmetric lift: the matroid on `EE` with
/// `rk(S) = min over A of (rk_P(A) + |S minus preimage(A)|)`.
pub fn msym_lift(p: &Polymatroid, map: &GroundMap) -> Result<Polymatroid, CoreError> {
    if p.ground() != map.base() {
        return Err(CoreError::GroundMismatch);
    }
    let n = map.n();
    let m = p.m();
    let table: Vec<i64> = Subset::all(n)
        .map(|s| {
            Subset::all(m)
                .map(|a| p.rank(a) as i64 + s.minus(map.preimage(a)).len() as i64)
                .min()
                .unwrap()
        })
        .collect();
    Ok(Polymatroid::validate(map.lifted().clone(), &table).expect("lift table is a matroid"))
}

/// The unique maximal geometric flat inside a flat of the lift: the largest
/// `preimage(G)` contained in `f` with `G` a flat of `p`.
pub fn max_geometric_flat(
    lift: &Polymatroid,
    map: &GroundMap,
    p: &Polymatroid,
    f: Subset,
) -> Result<Subset, CoreError> {
    if !lift.is_flat(f) {
        return Err(CoreError::FlatExpected { subset: f });
    }
    let mut best = Subset::EMPTY;
    let mut found = false;
    for g in p.flats().flats {
        let pre = map.preimage(g);
        if pre.is_subset_of(f) && (!found || best.is_subset_of(pre)) {
            best = pre;
            found = true;
        }
    }
    debug_assert!(found, "the preimage of the minimal flat sits inside every flat");
    Ok(best)
}
