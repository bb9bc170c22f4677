//! The explicit pairing rules between `N` and other countable sets, including
//! the serpentine walk over the `N x N` grid.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{Integer, Natural, Whole};

/// A cell of the infinite grid; the cell at `(row, col)` holds `row/col`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPosition {
    pub row: Natural,
    pub col: Natural,
}

impl GridPosition {
    pub fn new(row: Natural, col: Natural) -> Self {
        GridPosition { row, col }
    }

    pub fn from_u64(row: u64, col: u64) -> Result<Self> {
        Ok(GridPosition {
            row: Natural::try_from(row)?,
            col: Natural::try_from(col)?,
        })
    }

    /// 1-based index of the anti-diagonal through this cell, `row + col - 1`.
    pub fn diagonal(&self) -> BigUint {
        self.row.value() + self.col.value() - 1u32
    }
}

impl fmt::Display for GridPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for GridPosition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "a grid position (row,col)"))?;
        let (r, c) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(s, "a grid position (row,col)"))?;
        Ok(GridPosition::new(r.parse()?, c.parse()?))
    }
}

pub fn to_even(n: &Natural) -> Natural {
    Natural::from_positive(n.value() << 1u32)
}

pub fn from_even(e: &Natural) -> Result<Natural> {
    if !e.is_even() {
        return Err(Error::not_in_domain(e, "even"));
    }
    Ok(Natural::from_positive(e.value() >> 1u32))
}

pub fn to_whole(n: &Natural) -> Whole {
    Whole::new(n.value() - 1u32)
}

pub fn from_whole(w: &Whole) -> Natural {
    Natural::from_positive(w.value() + 1u32)
}

/// Even `n` goes to `n/2`, odd `n` to `-(n-1)/2`.
pub fn to_integer(n: &Natural) -> Integer {
    let v = n.value();
    if v.is_even() {
        Integer::new(BigInt::from(v >> 1u32))
    } else {
        Integer::new(BigInt::from_biguint(Sign::Minus, (v - 1u32) >> 1u32))
    }
}

/// Positive `z` doubles, negative `z` goes to `2|z| + 1`, and zero goes to 1
/// (the first column of the N/Z scheme).
pub fn from_integer(z: &Integer) -> Natural {
    let doubled = z.abs() << 1u32;
    if z.is_positive() {
        Natural::from_positive(doubled)
    } else {
        Natural::from_positive(doubled + 1u32)
    }
}

pub fn to_odd(n: &Natural) -> Natural {
    Natural::from_positive((n.value() << 1u32) - 1u32)
}

pub fn from_odd(o: &Natural) -> Result<Natural> {
    if o.is_even() {
        return Err(Error::not_in_domain(o, "odd"));
    }
    Ok(Natural::from_positive((o.value() >> 1u32) + 1u32))
}

/// `d(d+1)/2`.
fn triangular(d: &BigUint) -> BigUint {
    (d * (d + 1u32)) >> 1u32
}

/// Visit order of `p` in the serpentine walk of the grid.
///
/// Diagonal `d = row + col - 1` is entered after the `d(d-1)/2` cells of the
/// earlier diagonals. Even diagonals run from `(1,d)` down to `(d,1)`, odd
/// diagonals from `(d,1)` up to `(1,d)`.
pub fn pair_index(p: &GridPosition) -> Natural {
    let d = p.diagonal();
    let before = triangular(&(&d - 1u32));
    let offset = if d.is_even() {
        p.row.value()
    } else {
        p.col.value()
    };
    Natural::from_positive(before + offset)
}

/// Inverse of [`pair_index`].
pub fn unpair(n: &Natural) -> GridPosition {
    let n = n.value();
    // Smallest d with d(d+1)/2 >= n; the square root gets within one step.
    let root = ((n << 3u32) + 1u32).sqrt();
    let mut d = if root.is_zero() {
        BigUint::zero()
    } else {
        (root - 1u32) >> 1u32
    };
    while &triangular(&d) < n {
        d += 1u32;
    }
    let offset = n - triangular(&(&d - 1u32));
    let other = &d + 1u32 - &offset;
    let (row, col) = if d.is_even() {
        (offset, other)
    } else {
        (other, offset)
    };
    GridPosition {
        row: Natural::from_positive(row),
        col: Natural::from_positive(col),
    }
}

/// The 1-based index range `first..=last` that diagonal `d` occupies.
pub fn diagonal_range(d: &Natural) -> (Natural, Natural) {
    let d = d.value();
    let first = triangular(&(d - 1u32)) + BigUint::one();
    (
        Natural::from_positive(first),
        Natural::from_positive(triangular(d)),
    )
}
