//! Vertex sets of at most 128 elements packed into a `u128`.

pub type Set = u128;

pub const CAPACITY: usize = 128;

#[inline]
pub fn bit(i: usize) -> Set {
    1u128 << i
}

/// `{0, ..., n-1}`.
#[inline]
pub fn full(n: usize) -> Set {
    if n >= CAPACITY {
        Set::MAX
    } else {
        bit(n) - 1
    }
}

/// Elements strictly greater than `i`.
#[inline]
pub fn above(i: usize) -> Set {
    if i + 1 >= CAPACITY {
        0
    } else {
        !full(i + 1)
    }
}

pub fn iter(mut s: Set) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(iter(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(128), u128::MAX);
        assert_eq!(above(1) & 0b1111, 0b1100);
        assert_eq!(above(127), 0);
    }
}
