//! The polymatroid kernel: validated rank tables and their lattice operations.
//!
//! A rank table is a dense array over all `2^m` subsets of the ground set.
//! Construction always goes through [`Polymatroid::validate`], so every value
//! in circulation satisfies normalization, monotonicity, submodularity, and
//! the type bound. Operations return fresh validated values; inputs are never
//! mutated.

use crate::error::{CoreError, ValidationError};
use crate::ground::GroundData;
use crate::subset::Subset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polymatroid {
    ground: GroundData,
    rank: Vec<u32>,
}

/// Flats of a polymatroid together with its loop set (the minimal flat).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flats {
    pub flats: Vec<Subset>,
    pub loops: Subset,
}

impl Polymatroid {
    /// Checks the four axioms and wraps the table. The monotonicity and
    /// submodularity scans run over cover pairs only, which is equivalent to
    /// the unrestricted conditions and keeps validation at `O(2^m m^2)`.
    pub fn validate(ground: GroundData, table: &[i64]) -> Result<Polymatroid, CoreError> {
        let m = ground.m();
        let size = ground.subset_count();
        if table.len() != size {
            return Err(ValidationError::WrongTableLength { expected: size, got: table.len() }.into());
        }
        for (bits, &v) in table.iter().enumerate() {
            if v < 0 {
                return Err(ValidationError::NegativeEntry { subset: Subset(bits as u32) }.into());
            }
        }
        if table[0] != 0 {
            return Err(ValidationError::Normalization.into());
        }
        for s in Subset::all(m) {
            for i in 0..m {
                if s.contains(i) {
                    continue;
                }
                let bigger = s.insert(i);
                if table[s.index()] > table[bigger.index()] {
                    return Err(ValidationError::Monotonicity { smaller: s, larger: bigger }.into());
                }
            }
        }
        for s in Subset::all(m) {
            for i in 0..m {
                if s.contains(i) {
                    continue;
                }
                for j in i + 1..m {
                    if s.contains(j) {
                        continue;
                    }
                    let si = s.insert(i);
                    let sj = s.insert(j);
                    let sij = si.insert(j);
                    if table[si.index()] + table[sj.index()] < table[s.index()] + table[sij.index()] {
                        return Err(ValidationError::Submodularity { s1: si, s2: sj }.into());
                    }
                }
            }
        }
        for i in 0..m {
            if table[Subset::singleton(i).index()] > ground.type_of(i) as i64 {
                return Err(ValidationError::TypeBound { element: i }.into());
            }
        }
        let rank = table.iter().map(|&v| v as u32).collect();
        Ok(Polymatroid { ground, rank })
    }

    pub fn ground(&self) -> &GroundData {
        &self.ground
    }

    pub fn m(&self) -> usize {
        self.ground.m()
    }

    pub fn rank(&self, s: Subset) -> u32 {
        self.rank[s.index()]
    }

    /// Rank of the full ground set.
    pub fn rank_total(&self) -> u32 {
        self.rank[self.ground.subset_count() - 1]
    }

    pub fn table(&self) -> &[u32] {
        &self.rank
    }

    /// The polymatroid with `rk(S) = sum of a_i over S`.
    pub fn boolean(ground: &GroundData) -> Polymatroid {
        let table: Vec<i64> = Subset::all(ground.m())
            .map(|s| s.iter().map(|i| ground.type_of(i) as i64).sum())
            .collect();
        Polymatroid::validate(ground.clone(), &table).expect("boolean table is valid")
    }

    /// The rank-zero polymatroid.
    pub fn zero(ground: &GroundData) -> Polymatroid {
        let table = vec![0i64; ground.subset_count()];
        Polymatroid::validate(ground.clone(), &table).expect("zero table is valid")
    }

    /// The polymatroid of rank `n - 1` whose class is the simplicial generator
    /// attached to `s`: the dual of the rank-one polymatroid with
    /// `rk(T) = 1` exactly when `T` meets `s`.
    ///
    /// Elements of `s` with type zero contribute nothing and are dropped; an
    /// argument whose support is entirely of type zero is rejected.
    pub fn simplicial_generator(ground: &GroundData, s: Subset) -> Result<Polymatroid, CoreError> {
        if s.is_empty() {
            return Err(CoreError::EmptySubset);
        }
        if !s.is_subset_of(Subset::full(ground.m())) {
            return Err(CoreError::UnknownElement { element: s.iter().last().unwrap() });
        }
        let support: Subset = s
            .iter()
            .filter(|&i| ground.type_of(i) > 0)
            .fold(Subset::EMPTY, |acc, i| acc.insert(i));
        if support.is_empty() {
            return Err(CoreError::EmptySubset);
        }
        let table: Vec<i64> = Subset::all(ground.m())
            .map(|t| {
                let modular: i64 = t.iter().map(|i| ground.type_of(i) as i64).sum();
                modular - i64::from(support.is_subset_of(t))
            })
            .collect();
        Ok(Polymatroid::validate(ground.clone(), &table).expect("simplicial generator table is valid"))
    }

    /// Dual rank function `rk'(S) = sum_{i in S} a_i + rk(E \ S) - r`.
    pub fn dual(&self) -> Polymatroid {
        let m = self.m();
        let r = self.rank_total() as i64;
        let table: Vec<i64> = Subset::all(m)
            .map(|s| {
                let modular: i64 = s.iter().map(|i| self.ground.type_of(i) as i64).sum();
                modular + self.rank(s.complement_in(m)) as i64 - r
            })
            .collect();
        Polymatroid::validate(self.ground.clone(), &table).expect("dual of a valid polymatroid is valid")
    }

    /// Box truncation: `rk'(S) = min over T of (rk(T) + sum of caps over S \ T)`.
    fn truncate_to_caps(&self, caps: &[u32]) -> Polymatroid {
        let m = self.m();
        let table: Vec<i64> = Subset::all(m)
            .map(|s| {
                s.subsets()
                    .map(|t| {
                        let capped: i64 = s.minus(t).iter().map(|i| caps[i] as i64).sum();
                        self.rank(t) as i64 + capped
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        Polymatroid::validate(self.ground.clone(), &table).expect("box truncation preserves validity")
    }

    /// Polymatroid union: the lattice points of the result are the lattice
    /// points of `I(P1) + I(P2)` truncated to the type box.
    pub fn union(&self, other: &Polymatroid) -> Result<Polymatroid, CoreError> {
        if self.ground != other.ground {
            return Err(CoreError::GroundMismatch);
        }
        let m = self.m();
        let table: Vec<i64> = Subset::all(m)
            .map(|s| {
                s.subsets()
                    .map(|t| {
                        let capped: i64 =
                            s.minus(t).iter().map(|i| self.ground.type_of(i) as i64).sum();
                        self.rank(t) as i64 + other.rank(t) as i64 + capped
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        Ok(Polymatroid::validate(self.ground.clone(), &table).expect("union table is valid"))
    }

    /// Polymatroid intersection, defined by duality from the union.
    pub fn meet(&self, other: &Polymatroid) -> Result<Polymatroid, CoreError> {
        Ok(self.dual().union(&other.dual())?.dual())
    }

    /// Truncates element `i` to at most `c`; the lattice points of the result
    /// are those of `I(P)` with `x_i <= c`.
    pub fn cap_element(&self, i: usize, c: u32) -> Result<Polymatroid, CoreError> {
        if i >= self.m() {
            return Err(CoreError::UnknownElement { element: i });
        }
        let mut caps: Vec<u32> = self.ground.type_vector().to_vec();
        caps[i] = caps[i].min(c);
        Ok(self.truncate_to_caps(&caps))
    }

    /// Smallest superset of `s` with the same rank.
    pub fn closure(&self, s: Subset) -> Subset {
        let mut cl = s;
        for i in 0..self.m() {
            if !cl.contains(i) && self.rank(cl.insert(i)) == self.rank(cl) {
                cl = cl.insert(i);
            }
        }
        // one sweep suffices: adding a rank-preserving element never makes
        // another element rank-increasing (submodularity)
        cl
    }

    /// All flats in bitmask order, plus the loop set.
    pub fn flats(&self) -> Flats {
        let m = self.m();
        let flats: Vec<Subset> = Subset::all(m)
            .filter(|&f| {
                (0..m).all(|e| f.contains(e) || self.rank(f.insert(e)) > self.rank(f))
            })
            .collect();
        let loops = self.closure(Subset::EMPTY);
        Flats { flats, loops }
    }

    pub fn is_flat(&self, f: Subset) -> bool {
        (0..self.m()).all(|e| f.contains(e) || self.rank(f.insert(e)) > self.rank(f))
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.m()).all(|i| self.rank(Subset::singleton(i)) > 0)
    }

    /// Singleton ranks all at most one.
    pub fn is_matroid(&self) -> bool {
        (0..self.m()).all(|i| self.rank(Subset::singleton(i)) <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ground(a: &[u32]) -> GroundData {
        GroundData::new(a.to_vec()).unwrap()
    }

    pub(crate) fn p0() -> Polymatroid {
        Polymatroid::validate(ground(&[2, 1]), &[0, 2, 1, 2]).unwrap()
    }

    #[test]
    fn validates_p0() {
        let p = p0();
        assert_eq!(p.rank_total(), 2);
        assert_eq!(p.table(), &[0, 2, 1, 2]);
    }

    #[test]
    fn rejects_nonzero_empty_rank() {
        let err = Polymatroid::validate(ground(&[2, 1]), &[1, 2, 1, 2]).unwrap_err();
        assert_eq!(err, CoreError::Validation(ValidationError::Normalization));
    }

    #[test]
    fn rejects_submodularity_violation_with_witness() {
        let err = Polymatroid::validate(ground(&[1, 1]), &[0, 0, 0, 1]).unwrap_err();
        assert_eq!(
            err,
            CoreError::Validation(ValidationError::Submodularity { s1: Subset(0b01), s2: Subset(0b10) })
        );
    }

    #[test]
    fn rejects_wrong_length_negative_monotone_and_type() {
        assert!(matches!(
            Polymatroid::validate(ground(&[1, 1]), &[0, 1, 1]),
            Err(CoreError::Validation(ValidationError::WrongTableLength { .. }))
        ));
        assert!(matches!(
            Polymatroid::validate(ground(&[1, 1]), &[0, -1, 1, 1]),
            Err(CoreError::Validation(ValidationError::NegativeEntry { .. }))
        ));
        assert!(matches!(
            Polymatroid::validate(ground(&[2, 2]), &[0, 2, 2, 1]),
            Err(CoreError::Validation(ValidationError::Monotonicity { .. }))
        ));
        assert!(matches!(
            Polymatroid::validate(ground(&[1, 1]), &[0, 2, 1, 2]),
            Err(CoreError::Validation(ValidationError::TypeBound { element: 0 }))
        ));
    }

    #[test]
    fn dual_of_p0() {
        assert_eq!(p0().dual().table(), &[0, 1, 1, 1]);
    }

    #[test]
    fn dual_swaps_boolean_and_zero() {
        let g = ground(&[2, 1]);
        let boolean = Polymatroid::boolean(&g);
        let zero = Polymatroid::zero(&g);
        assert_eq!(boolean.dual(), zero);
        assert_eq!(zero.dual(), boolean);
    }

    #[test]
    fn dual_is_an_involution() {
        let p = p0();
        assert_eq!(p.dual().dual(), p);
    }

    #[test]
    fn union_examples() {
        let g = ground(&[2, 1]);
        let boolean = Polymatroid::boolean(&g);
        let zero = Polymatroid::zero(&g);
        let p = p0();
        assert_eq!(zero.union(&p).unwrap(), p);
        assert_eq!(boolean.union(&boolean).unwrap(), boolean);

        let h2 = Polymatroid::simplicial_generator(&g, Subset(0b10)).unwrap();
        assert_eq!(p.dual().union(&h2.dual()).unwrap().table(), &[0, 1, 1, 2]);
    }

    #[test]
    fn meet_examples() {
        let g = ground(&[2, 1]);
        let p = p0();
        let boolean = Polymatroid::boolean(&g);
        let zero = Polymatroid::zero(&g);
        assert_eq!(boolean.meet(&p).unwrap(), p);
        assert_eq!(zero.meet(&p).unwrap(), zero);

        let h2 = Polymatroid::simplicial_generator(&g, Subset(0b10)).unwrap();
        assert_eq!(p.meet(&h2).unwrap().table(), &[0, 1, 0, 1]);
    }

    #[test]
    fn union_rejects_ground_mismatch() {
        let p = p0();
        let q = Polymatroid::boolean(&ground(&[1, 1]));
        assert_eq!(p.union(&q).unwrap_err(), CoreError::GroundMismatch);
    }

    #[test]
    fn cap_element_examples() {
        let p = p0();
        assert_eq!(p.cap_element(0, 2).unwrap(), p);
        assert_eq!(p.cap_element(1, 0).unwrap().table(), &[0, 2, 0, 2]);

        let boolean = Polymatroid::boolean(&ground(&[2, 1]));
        let capped = boolean.cap_element(0, 1).unwrap();
        assert_eq!(capped.table(), &[0, 1, 1, 2]);
        assert!(matches!(p.cap_element(7, 0), Err(CoreError::UnknownElement { element: 7 })));
    }

    #[test]
    fn flats_of_p0() {
        let f = p0().flats();
        assert_eq!(f.flats, vec![Subset(0b00), Subset(0b10), Subset(0b11)]);
        assert_eq!(f.loops, Subset::EMPTY);
    }

    #[test]
    fn flats_of_boolean_and_zero() {
        let g = ground(&[2, 1]);
        let f = Polymatroid::boolean(&g).flats();
        assert_eq!(f.flats.len(), 4);
        assert_eq!(f.loops, Subset::EMPTY);

        let f = Polymatroid::zero(&g).flats();
        assert_eq!(f.flats, vec![Subset(0b11)]);
        assert_eq!(f.loops, Subset(0b11));
    }

    #[test]
    fn simplicial_generator_examples() {
        let g11 = ground(&[1, 1]);
        let h1 = Polymatroid::simplicial_generator(&g11, Subset(0b01)).unwrap();
        assert_eq!(h1.table(), &[0, 0, 1, 1]);

        let g21 = ground(&[2, 1]);
        let h2 = Polymatroid::simplicial_generator(&g21, Subset(0b10)).unwrap();
        assert_eq!(h2.table(), &[0, 2, 0, 2]);

        let he = Polymatroid::simplicial_generator(&g21, Subset(0b11)).unwrap();
        assert_eq!(he.table(), &[0, 2, 1, 2]);
        assert_eq!(he.rank_total(), g21.n() - 1);

        assert!(matches!(
            Polymatroid::simplicial_generator(&g21, Subset::EMPTY),
            Err(CoreError::EmptySubset)
        ));
    }

    #[test]
    fn simplicial_generator_drops_type_zero_elements() {
        let g = ground(&[1, 0]);
        let h = Polymatroid::simplicial_generator(&g, Subset(0b11)).unwrap();
        assert_eq!(h, Polymatroid::simplicial_generator(&g, Subset(0b01)).unwrap());
        assert!(matches!(
            Polymatroid::simplicial_generator(&g, Subset(0b10)),
            Err(CoreError::EmptySubset)
        ));
    }

    #[test]
    fn boolean_examples() {
        assert_eq!(Polymatroid::boolean(&ground(&[2, 1])).table(), &[0, 2, 1, 3]);
        assert_eq!(Polymatroid::zero(&ground(&[2, 1])).table(), &[0, 0, 0, 0]);
        assert_eq!(Polymatroid::boolean(&ground(&[1])).table(), &[0, 1]);
    }

    #[test]
    fn type_zero_elements_are_loops() {
        let g = ground(&[2, 0]);
        let b = Polymatroid::boolean(&g);
        assert_eq!(b.flats().loops, Subset(0b10));
        assert!(!b.is_loopless());
    }
}
