//! Hall–Rado condition checks and transversal-style matchings.

use crate::error::CoreError;
use crate::ground::GroundData;
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// A sequence of nonempty subsets of the ground set. Duplicates are allowed
/// and the order is irrelevant for every predicate defined on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetSequence {
    sets: Vec<Subset>,
}

impl SetSequence {
    pub fn new(sets: Vec<Subset>, ground: &GroundData) -> Result<SetSequence, CoreError> {
        let full = Subset::full(ground.m());
        for (position, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(CoreError::EmptySetInSequence { position });
            }
            if !s.is_subset_of(full) {
                return Err(CoreError::UnknownElement { element: s.iter().last().unwrap() });
            }
        }
        Ok(SetSequence { sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }
}

/// True iff `rk(union of S_j over j in J) >= |J|` for every index set `J`.
pub fn hall_rado(p: &Polymatroid, seq: &SetSequence) -> bool {
    let k = seq.len();
    let mut union = vec![Subset::EMPTY; 1 << k];
    for mask in 1..1u64 << k {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let u = union[rest as usize].union(seq.sets()[low]);
        union[mask as usize] = u;
        if (p.rank(u) as u64) < mask.count_ones() as u64 {
            return false;
        }
    }
    true
}

/// Searches for `f` with `f(j)` in `S_j` and the count vector of `f` inside
/// the independence polytope. Returns the lexicographically smallest such
/// assignment, or `None` when the Hall–Rado condition fails.
pub fn rado_matching(p: &Polymatroid, seq: &SetSequence) -> Option<Vec<usize>> {
    let mut counts = vec![0u32; p.m()];
    let mut picks = Vec::with_capacity(seq.len());
    if search(p, seq.sets(), &mut counts, &mut picks) {
        Some(picks)
    } else {
        None
    }
}

fn search(p: &Polymatroid, sets: &[Subset], counts: &mut Vec<u32>, picks: &mut Vec<usize>) -> bool {
    let j = picks.len();
    if j == sets.len() {
        return true;
    }
    for e in sets[j].iter() {
        counts[e] += 1;
        if independent(p, counts) {
            picks.push(e);
            if search(p, sets, counts, picks) {
                return true;
            }
            picks.pop();
        }
        counts[e] -= 1;
    }
    false
}

fn independent(p: &Polymatroid, counts: &[u32]) -> bool {
    Subset::all(p.m()).all(|s| {
        let total: u32 = s.iter().map(|i| counts[i]).sum();
        total <= p.rank(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p0() -> Polymatroid {
        let g = GroundData::new(vec![2, 1]).unwrap();
        Polymatroid::validate(g, &[0, 2, 1, 2]).unwrap()
    }

    fn seq(p: &Polymatroid, sets: &[u32]) -> SetSequence {
        SetSequence::new(sets.iter().map(|&s| Subset(s)).collect(), p.ground()).unwrap()
    }

    #[test]
    fn hall_rado_examples() {
        let p = p0();
        assert!(hall_rado(&p, &seq(&p, &[0b01, 0b01])));
        assert!(!hall_rado(&p, &seq(&p, &[0b10, 0b10])));
        assert!(hall_rado(&p, &seq(&p, &[])));
    }

    #[test]
    fn rejects_empty_member() {
        let p = p0();
        let err = SetSequence::new(vec![Subset(0b01), Subset::EMPTY], p.ground()).unwrap_err();
        assert_eq!(err, CoreError::EmptySetInSequence { position: 1 });
    }

    #[test]
    fn matching_examples() {
        let p = p0();
        assert_eq!(rado_matching(&p, &seq(&p, &[0b01, 0b01])), Some(vec![0, 0]));
        assert_eq!(rado_matching(&p, &seq(&p, &[0b01, 0b10])), Some(vec![0, 1]));
        assert_eq!(rado_matching(&p, &seq(&p, &[0b10, 0b10])), None);
    }

    #[test]
    fn matching_is_lexicographically_smallest() {
        let p = p0();
        // both elements work in the first slot; 0 must be picked
        assert_eq!(rado_matching(&p, &seq(&p, &[0b11])), Some(vec![0]));
    }

    #[test]
    fn matching_agrees_with_hall_rado_beyond_rank_length() {
        let p = p0();
        let sequences: Vec<Vec<u32>> = vec![
            vec![0b01, 0b01, 0b01],
            vec![0b01, 0b01, 0b10],
            vec![0b11, 0b11, 0b11],
        ];
        for sets in sequences {
            let s = seq(&p, &sets);
            assert_eq!(rado_matching(&p, &s).is_some(), hall_rado(&p, &s));
        }
    }
}
