//! Subsets of a small ground set, stored as bitmasks.
//!
//! Bit `i` stands for the `i`-th ground element, so a rank table indexed by
//! `Subset::index` is laid out in little-endian bitmask order.

use std::fmt;

/// A subset of `{0, .., m-1}` for `m <= 32`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full set on `m` elements.
    pub fn full(m: usize) -> Subset {
        debug_assert!(m <= 32);
        if m == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << m) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u32 << i)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement_in(self, m: usize) -> Subset {
        Subset::full(m).minus(self)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates the elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `{0, .., m-1}` in bitmask order.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << m).map(|bits| Subset(bits as u32))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut cur = Some(0u32);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == mask {
                None
            } else {
                Some(out.wrapping_sub(mask) & mask)
            };
            Some(Subset(out))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_everything_in_order() {
        let s = Subset(0b1011);
        let subs: Vec<u32> = s.subsets().map(|t| t.0).collect();
        assert_eq!(subs, vec![0b0000, 0b0001, 0b0010, 0b0011, 0b1000, 0b1001, 0b1010, 0b1011]);
    }

    #[test]
    fn iter_reports_elements() {
        let s = Subset(0b10110);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn complement_and_ops() {
        let s = Subset(0b101);
        assert_eq!(s.complement_in(3), Subset(0b010));
        assert!(Subset(0b001).is_subset_of(s));
        assert!(!Subset(0b010).is_subset_of(s));
    }
}
