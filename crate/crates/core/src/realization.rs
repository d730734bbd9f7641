//! Subspace realizations: exact rational matrices whose block-column ranks
//! produce polymatroid rank functions, together with dual realizations and a
//! seeded random generator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CoreError;
use crate::ground::GroundData;
use crate::lift::GroundMap;
use crate::linalg;
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// A matrix whose rows form a basis of a subspace of the block-decomposed
/// ambient space. Columns are grouped into blocks of sizes `a_1, .., a_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealizationMatrix {
    map: GroundMap,
    rows: Vec<Vec<BigRational>>,
}

impl RealizationMatrix {
    /// Requires the rows to be linearly independent; an empty row list is the
    /// zero subspace.
    pub fn new(ground: &GroundData, rows: Vec<Vec<BigRational>>) -> Result<RealizationMatrix, CoreError> {
        let map = GroundMap::of_type(ground)?;
        let n = map.n();
        for row in &rows {
            if row.len() != n {
                return Err(CoreError::LengthMismatch { expected: n, got: row.len() });
            }
        }
        if linalg::rational_rank(&rows) != rows.len() {
            return Err(CoreError::RankDeficientRows);
        }
        Ok(RealizationMatrix { map, rows })
    }

    pub fn ground(&self) -> &GroundData {
        self.map.base()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.map.n()
    }

    fn columns(&self, cols: Subset) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|row| cols.iter().map(|j| row[j].clone()).collect())
            .collect()
    }

    /// The polymatroid with `rk(S) =` rank of the column submatrix on the
    /// blocks of `S`.
    pub fn rank_function(&self) -> Polymatroid {
        let ground = self.ground().clone();
        let m = ground.m();
        let table: Vec<i64> = Subset::all(m)
            .map(|s| linalg::rational_rank(&self.columns(self.map.preimage(s))) as i64)
            .collect();
        Polymatroid::validate(ground, &table).expect("realization ranks satisfy the axioms")
    }

    /// A basis of the annihilator of the row space, realizing the dual
    /// polymatroid on the same blocks.
    pub fn realize_dual(&self) -> RealizationMatrix {
        let kernel = linalg::kernel_basis(&self.rows, self.ambient_dim());
        RealizationMatrix::new(self.ground(), kernel).expect("kernel rows are independent")
    }
}

/// Deterministic random realization with integer entries in
/// `[-entry_bound, entry_bound]`; retries until the rows are independent.
pub fn random_realization(
    ground: &GroundData,
    l: usize,
    seed: u64,
    entry_bound: u32,
) -> Result<RealizationMatrix, CoreError> {
    let map = GroundMap::of_type(ground)?;
    let n = map.n();
    if l > n {
        return Err(CoreError::LengthMismatch { expected: n, got: l });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = entry_bound as i64;
    const ATTEMPTS: usize = 64;
    for _ in 0..ATTEMPTS {
        let rows: Vec<Vec<BigRational>> = (0..l)
            .map(|_| {
                (0..n)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                    .collect()
            })
            .collect();
        if let Ok(mat) = RealizationMatrix::new(ground, rows) {
            return Ok(mat);
        }
    }
    Err(CoreError::GenerationFailed { attempts: ATTEMPTS })
}

/// Column matroid of the matrix after a block-diagonal change of basis,
/// recorded as a rank table on `EE` of type `(1, .., 1)`. Used to compare a
/// generic realization of the lift against the combinatorial lift.
pub fn column_matroid_after_basis_change(
    mat: &RealizationMatrix,
    change: &[Vec<Vec<BigRational>>],
) -> Result<Polymatroid, CoreError> {
    let map = GroundMap::of_type(mat.ground())?;
    let n = map.n();
    // multiply the block-diagonal change matrix on the right
    let mut rows = vec![vec![BigRational::zero(); n]; mat.dim()];
    for (r, row) in mat.rows().iter().enumerate() {
        for (i, block) in change.iter().enumerate() {
            let fiber: Vec<usize> = map.fiber(i).iter().collect();
            for (bc, &col) in fiber.iter().enumerate() {
                let mut acc = BigRational::zero();
                for (br, &src) in fiber.iter().enumerate() {
                    acc += &row[src] * &block[br][bc];
                }
                rows[r][col] = acc;
            }
        }
    }
    let table: Vec<i64> = Subset::all(n)
        .map(|s| {
            let cols: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|row| s.iter().map(|j| row[j].clone()).collect())
                .collect();
            linalg::rational_rank(&cols) as i64
        })
        .collect();
    Polymatroid::validate(map.lifted().clone(), &table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ground(a: &[u32]) -> GroundData {
        GroundData::new(a.to_vec()).unwrap()
    }

    #[test]
    fn p0_realization() {
        let g = ground(&[2, 1]);
        let mat = RealizationMatrix::new(
            &g,
            vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]],
        )
        .unwrap();
        assert_eq!(mat.rank_function().table(), &[0, 2, 1, 2]);
    }

    #[test]
    fn block_identity_is_boolean_and_empty_is_zero() {
        let g = ground(&[2, 1]);
        let eye = RealizationMatrix::new(
            &g,
            vec![
                vec![rat(1), rat(0), rat(0)],
                vec![rat(0), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(1)],
            ],
        )
        .unwrap();
        assert_eq!(eye.rank_function(), Polymatroid::boolean(&g));

        let empty = RealizationMatrix::new(&g, vec![]).unwrap();
        assert_eq!(empty.rank_function(), Polymatroid::zero(&g));
        assert_eq!(eye.realize_dual().rank_function(), Polymatroid::zero(&g));
    }

    #[test]
    fn dual_realization_of_p0() {
        let g = ground(&[2, 1]);
        let mat = RealizationMatrix::new(
            &g,
            vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]],
        )
        .unwrap();
        let dual = mat.realize_dual();
        assert_eq!(dual.dim(), 1);
        assert_eq!(dual.rank_function().table(), &[0, 1, 1, 1]);
        // annihilator of the annihilator recovers the rank function
        assert_eq!(dual.realize_dual().rank_function(), mat.rank_function());
    }

    #[test]
    fn rejects_dependent_rows() {
        let g = ground(&[1, 1]);
        let err = RealizationMatrix::new(&g, vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]]);
        assert_eq!(err.unwrap_err(), CoreError::RankDeficientRows);
    }

    #[test]
    fn random_realization_is_deterministic() {
        let g = ground(&[2, 1]);
        let a = random_realization(&g, 2, 7, 3).unwrap();
        let b = random_realization(&g, 2, 7, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rank_function().rank_total(), 2);
    }

    #[test]
    fn full_rank_generic_is_boolean() {
        let g = ground(&[2, 1]);
        let mat = random_realization(&g, 3, 11, 5).unwrap();
        assert_eq!(mat.rank_function(), Polymatroid::boolean(&g));
    }

    #[test]
    fn zero_dimensional_realization() {
        let g = ground(&[2, 1]);
        let mat = random_realization(&g, 0, 3, 3).unwrap();
        assert_eq!(mat.rank_function(), Polymatroid::zero(&g));
    }

    #[test]
    fn identity_basis_change_preserves_columns() {
        let g = ground(&[2, 1]);
        let mat = RealizationMatrix::new(
            &g,
            vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]],
        )
        .unwrap();
        let blocks = vec![
            vec![vec![BigRational::one(), rat(0)], vec![rat(0), BigRational::one()]],
            vec![vec![BigRational::one()]],
        ];
        let col = column_matroid_after_basis_change(&mat, &blocks).unwrap();
        assert_eq!(col.rank(Subset(0b001)), 1);
        assert_eq!(col.rank(Subset(0b011)), 2);
        assert_eq!(col.rank_total(), 2);
    }
}
