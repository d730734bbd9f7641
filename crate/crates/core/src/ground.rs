//! Ground-set data: element count and the type vector bounding singleton ranks.

use crate::error::CoreError;

/// Default cap on the ground-set size; every algorithm here walks all `2^m` subsets.
pub const DEFAULT_GROUND_CAP: usize = 12;

/// A ground set `{0, .., m-1}` together with its type vector `a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroundData {
    a: Vec<u32>,
}

impl GroundData {
    pub fn new(a: Vec<u32>) -> Result<GroundData, CoreError> {
        GroundData::with_cap(a, DEFAULT_GROUND_CAP)
    }

    pub fn with_cap(a: Vec<u32>, cap: usize) -> Result<GroundData, CoreError> {
        if a.is_empty() {
            return Err(CoreError::EmptyGround);
        }
        if a.len() > cap.min(32) {
            return Err(CoreError::GroundTooLarge { m: a.len(), cap: cap.min(32) });
        }
        Ok(GroundData { a })
    }

    /// Number of ground elements.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Sum of the type vector.
    pub fn n(&self) -> u32 {
        self.a.iter().sum()
    }

    pub fn type_vector(&self) -> &[u32] {
        &self.a
    }

    pub fn type_of(&self, i: usize) -> u32 {
        self.a[i]
    }

    pub fn subset_count(&self) -> usize {
        1 << self.m()
    }
}
