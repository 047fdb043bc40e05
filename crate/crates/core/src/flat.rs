//! Subsets of a ground set of at most 64 elements, stored as one machine word.

use std::fmt;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of the ground set. Used for flats and for arbitrary subsets alike;
/// whether a value is closed depends on the lattice it is read against.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Flat(pub u64);

impl Flat {
    pub const EMPTY: Flat = Flat(0);

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Flat {
        let mut bits = 0u64;
        for e in elements {
            assert!(e < MAX_GROUND, "element {e} out of range");
            bits |= 1u64 << e;
        }
        Flat(bits)
    }

    pub fn singleton(e: usize) -> Flat {
        Flat(1u64 << e)
    }

    /// The full ground set on `n` elements.
    pub fn full(n: usize) -> Flat {
        Flat(full_mask(n))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    pub fn is_subset(self, other: Flat) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Flat) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: Flat) -> Flat {
        Flat(self.0 | other.0)
    }

    pub fn intersection(self, other: Flat) -> Flat {
        Flat(self.0 & other.0)
    }

    pub fn minus(self, other: Flat) -> Flat {
        Flat(self.0 & !other.0)
    }

    pub fn with(self, e: usize) -> Flat {
        Flat(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Flat {
        Flat(self.0 & !(1u64 << e))
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// Key comparing indicator vectors lexicographically from element 0, so
    /// that a set containing element 0 sorts after one that does not.
    pub fn lex_key(self) -> u64 {
        self.0.reverse_bits()
    }

    /// Key ordering subsets by size, then by bit pattern. A linear extension
    /// of inclusion.
    pub fn size_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn full_mask(n: usize) -> u64 {
    assert!(n <= MAX_GROUND);
    if n == MAX_GROUND {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs the bits of `x` that sit at positions of `keep` into the low bits,
/// preserving their relative order.
pub fn compress(x: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut k = keep;
    let mut i = 0;
    while k != 0 {
        let b = k.trailing_zeros();
        if x >> b & 1 == 1 {
            out |= 1u64 << i;
        }
        i += 1;
        k &= k - 1;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `x` onto the positions of `keep`.
pub fn expand(x: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut k = keep;
    let mut i = 0;
    while k != 0 {
        let b = k.trailing_zeros();
        if x >> i & 1 == 1 {
            out |= 1u64 << b;
        }
        i += 1;
        k &= k - 1;
    }
    out
}

/// Maps each kept position to its index after [`compress`].
pub fn compress_index(e: usize, keep: u64) -> Option<usize> {
    if keep >> e & 1 == 0 {
        return None;
    }
    Some((keep & ((1u64 << e) - 1)).count_ones() as usize)
}
