//! Exact lattice-point enumeration for independence and base polytopes,
//! rank recovery from point sets, and unit-cube slicing.
//!
//! Enumeration walks the bounding box `prod [0, rk({i})]` and filters by all
//! `2^m` constraints, so it costs `O(prod(rk(i)+1) * 2^m)`. Output order is
//! lexicographic, which downstream golden tests rely on.

use crate::error::CoreError;
use crate::ground::GroundData;
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

pub type LatticePoint = Vec<u32>;

/// One cell of a unit-cube slicing: the translation vector and the matroid
/// whose independence polytope is the translated cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cell {
    pub translation: LatticePoint,
    pub matroid: Polymatroid,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellDecomposition {
    pub cells: Vec<Cell>,
}

/// All nonnegative integer vectors satisfying every rank constraint, in
/// lexicographic order.
pub fn independence_points(p: &Polymatroid) -> Vec<LatticePoint> {
    let m = p.m();
    let bounds: Vec<u32> = (0..m).map(|i| p.rank(Subset::singleton(i))).collect();
    let mut out = Vec::new();
    let mut x = vec![0u32; m];
    enumerate_box(&bounds, 0, &mut x, &mut |x| {
        if satisfies_all(p, x) {
            out.push(x.to_vec());
        }
    });
    out
}

fn enumerate_box(bounds: &[u32], i: usize, x: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if i == bounds.len() {
        visit(x);
        return;
    }
    for v in 0..=bounds[i] {
        x[i] = v;
        enumerate_box(bounds, i + 1, x, visit);
    }
}

fn satisfies_all(p: &Polymatroid, x: &[u32]) -> bool {
    Subset::all(p.m()).all(|s| s.iter().map(|i| x[i]).sum::<u32>() <= p.rank(s))
}

/// Independence points whose coordinates sum to the rank.
pub fn base_points(p: &Polymatroid) -> Vec<LatticePoint> {
    let r = p.rank_total();
    independence_points(p)
        .into_iter()
        .filter(|x| x.iter().sum::<u32>() == r)
        .collect()
}

/// Recovers a rank table from a point set: `rk(S) = max over points of the
/// coordinate sum over S`. Round-trips with `independence_points`.
pub fn rank_from_points(points: &[LatticePoint], ground: &GroundData) -> Result<Polymatroid, CoreError> {
    if points.is_empty() {
        return Err(CoreError::EmptyPointSet);
    }
    let m = ground.m();
    let table: Vec<i64> = Subset::all(m)
        .map(|s| {
            points
                .iter()
                .map(|x| s.iter().map(|i| x[i] as i64).sum::<i64>())
                .max()
                .unwrap()
        })
        .collect();
    Polymatroid::validate(ground.clone(), &table)
}

/// Slices `I(Q)` by integral translates of the unit cube. Every nonempty cell
/// is recorded as a translation `v` plus the matroid whose independence
/// points are the cell's lattice points shifted to the origin.
pub fn cube_slice(q: &Polymatroid) -> CellDecomposition {
    let m = q.m();
    let points = independence_points(q);
    let bounds: Vec<u32> = (0..m).map(|i| q.rank(Subset::singleton(i)).saturating_sub(1)).collect();
    let ones = GroundData::new(vec![1; m]).expect("cube cells reuse the ground size");
    let mut cells = Vec::new();
    let mut v = vec![0u32; m];
    enumerate_box(&bounds, 0, &mut v, &mut |v| {
        let in_cell: Vec<LatticePoint> = points
            .iter()
            .filter(|x| x.iter().zip(v).all(|(&xi, &vi)| vi <= xi && xi <= vi + 1))
            .map(|x| x.iter().zip(v).map(|(&xi, &vi)| xi - vi).collect())
            .collect();
        if !in_cell.is_empty() {
            let matroid = rank_from_points(&in_cell, &ones)
                .expect("cube cells carry valid matroid tables");
            cells.push(Cell { translation: v.to_vec(), matroid });
        }
    });
    CellDecomposition { cells }
}
