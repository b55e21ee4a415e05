//! Small exact linear algebra over `Ratio<i64>` for root covectors.
//!
//! Every matrix handled here is built from root coordinates (entries in
//! {-2, ..., 2}) on at most a few dozen columns, so `i64` ratios never come
//! close to overflowing.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

pub(crate) type Q64 = Ratio<i64>;

/// Row echelon basis of a row space, kept in reduced form.
#[derive(Debug, Clone)]
pub(crate) struct RowSpace {
    ncols: usize,
    /// Reduced rows together with their pivot column.
    rows: Vec<(usize, Vec<Q64>)>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows<'a, I>(ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [i64]>,
    {
        let mut space = Self::new(ncols);
        for row in rows {
            space.insert(row);
        }
        space
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &[i64]) -> Vec<Q64> {
        let mut v: Vec<Q64> = row.iter().map(|&x| Q64::from_integer(x)).collect();
        for (pivot, r) in &self.rows {
            let c = v[*pivot];
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= c * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, row: &[i64]) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    /// Adds a row; returns whether the rank increased.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        let mut v = self.reduce(row);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot];
        for x in v.iter_mut() {
            *x /= lead;
        }
        for (_, r) in self.rows.iter_mut() {
            let c = r[pivot];
            if !c.is_zero() {
                for (x, y) in r.iter_mut().zip(&v) {
                    *x -= c * y;
                }
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    /// Basis of the right null space `{ x : r · x = 0 for every row r }`.
    ///
    /// One vector per free column, with a 1 in that column; vectors are
    /// ordered by free column.
    pub fn nullspace(&self) -> Vec<Vec<Q64>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        (0..self.ncols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Q64::zero(); self.ncols];
                v[free] = Q64::from_integer(1);
                for (p, r) in &self.rows {
                    v[*p] = -r[free];
                }
                v
            })
            .collect()
    }
}

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same line whose first nonzero entry is positive.
pub(crate) fn primitive(v: &[Q64]) -> Option<Vec<i64>> {
    let first = v.iter().position(|x| !x.is_zero())?;
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    let sign = if ints[first].is_negative() { -1 } else { 1 };
    Some(ints.iter().map(|x| sign * x / g).collect())
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_difference_rows_is_fused() {
        let rows: [&[i64]; 1] = [&[1, -1, 0, 0]];
        let space = RowSpace::from_rows(4, rows);
        let basis = space.nullspace();
        assert_eq!(basis.len(), 3);
        let ints: Vec<Vec<i64>> = basis.iter().map(|v| primitive(v).unwrap()).collect();
        assert_eq!(ints, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    }

    #[test]
    fn span_membership_and_rank() {
        let rows: [&[i64]; 2] = [&[1, -1, 0], &[0, 1, -1]];
        let space = RowSpace::from_rows(3, rows);
        assert_eq!(space.rank(), 2);
        assert!(space.contains(&[1, 0, -1]));
        assert!(!space.contains(&[1, 1, 0]));
    }

    #[test]
    fn primitive_normalizes_sign_and_scale() {
        let v = [Q64::new(-1, 2), Q64::new(1, 2), Q64::zero()];
        assert_eq!(primitive(&v), Some(vec![1, -1, 0]));
        assert_eq!(primitive(&[Q64::zero()]), None);
    }
}
