use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Prime;
use crate::{Error, Result};

/// Source of the rows of an infinite generating matrix.
///
/// Rows and columns are 1-based. Implementations must be pure: the same
/// `(row, depth)` always yields the same prefix.
pub trait RowGenerator: Send + Sync {
    /// The first `depth` entries of row `row`.
    fn row_prefix(&self, row: usize, depth: usize) -> Vec<u64>;

    /// Index of the last nonzero column of `row` (0 for a zero row), if known.
    fn last_nonzero(&self, _row: usize) -> Option<usize> {
        None
    }
}

#[derive(Clone)]
enum Rows {
    Identity,
    /// First row all ones, every other row a unit vector on the diagonal.
    AllOnesFirstRow,
    /// Explicit top-left block; everything outside it is zero.
    Dense(Vec<Vec<u64>>),
    Custom {
        source: Arc<dyn RowGenerator>,
        finite_rows: bool,
    },
}

/// A generating matrix over `Z_q` with infinitely many rows and columns.
#[derive(Clone)]
pub struct GenMatrix {
    q: Prime,
    rows: Rows,
}

impl GenMatrix {
    pub fn identity(q: Prime) -> Self {
        GenMatrix {
            q,
            rows: Rows::Identity,
        }
    }

    /// The matrix whose first row is all ones and whose remaining rows are
    /// those of the identity. Its first row is infinite.
    pub fn all_ones_first_row(q: Prime) -> Self {
        GenMatrix {
            q,
            rows: Rows::AllOnesFirstRow,
        }
    }

    /// A matrix given by an explicit block, padded with zeros.
    pub fn dense(q: Prime, rows: Vec<Vec<u64>>) -> Result<Self> {
        for row in &rows {
            for &e in row {
                q.check(e)?;
            }
        }
        Ok(GenMatrix {
            q,
            rows: Rows::Dense(rows),
        })
    }

    pub fn custom(q: Prime, source: Arc<dyn RowGenerator>, finite_rows: bool) -> Self {
        GenMatrix {
            q,
            rows: Rows::Custom {
                source,
                finite_rows,
            },
        }
    }

    pub fn modulus(&self) -> Prime {
        self.q
    }

    /// Whether every row has finitely many nonzero entries.
    pub fn is_finite_row(&self) -> bool {
        match &self.rows {
            Rows::Identity | Rows::Dense(_) => true,
            Rows::AllOnesFirstRow => false,
            Rows::Custom { finite_rows, .. } => *finite_rows,
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.rows, Rows::Identity)
    }

    pub fn is_all_ones_first_row(&self) -> bool {
        matches!(self.rows, Rows::AllOnesFirstRow)
    }

    /// The stored block of a dense matrix.
    pub fn dense_block(&self) -> Option<&[Vec<u64>]> {
        match &self.rows {
            Rows::Dense(rows) => Some(rows),
            _ => None,
        }
    }

    /// Last nonzero column of `row` (0 for a zero row) when the matrix has finite rows.
    pub fn row_support(&self, row: usize) -> Option<usize> {
        assert!(row >= 1, "rows are 1-based");
        match &self.rows {
            Rows::Identity => Some(row),
            Rows::AllOnesFirstRow => (row > 1).then_some(row),
            Rows::Dense(rows) => Some(
                rows.get(row - 1)
                    .and_then(|r| r.iter().rposition(|&e| e != 0))
                    .map_or(0, |c| c + 1),
            ),
            Rows::Custom {
                source,
                finite_rows,
            } => {
                if *finite_rows {
                    source.last_nonzero(row)
                } else {
                    None
                }
            }
        }
    }

    /// The first `depth` entries of `row`.
    pub fn row_prefix(&self, row: usize, depth: usize) -> Result<Vec<u64>> {
        assert!(row >= 1, "rows are 1-based");
        let out = match &self.rows {
            Rows::Identity => {
                let mut r = vec![0; depth];
                if row <= depth {
                    r[row - 1] = 1;
                }
                r
            }
            Rows::AllOnesFirstRow => {
                if row == 1 {
                    vec![1; depth]
                } else {
                    let mut r = vec![0; depth];
                    if row <= depth {
                        r[row - 1] = 1;
                    }
                    r
                }
            }
            Rows::Dense(rows) => {
                let mut r = vec![0; depth];
                if let Some(stored) = rows.get(row - 1) {
                    let k = stored.len().min(depth);
                    r[..k].copy_from_slice(&stored[..k]);
                }
                r
            }
            Rows::Custom { source, .. } => {
                let r = source.row_prefix(row, depth);
                if r.len() != depth {
                    return Err(Error::DimensionMismatch {
                        expected: depth,
                        found: r.len(),
                    });
                }
                for &e in &r {
                    self.q.check(e)?;
                }
                r
            }
        };
        Ok(out)
    }

    /// The top-left `rows x cols` block.
    pub fn block(&self, rows: usize, cols: usize) -> Result<Vec<Vec<u64>>> {
        (1..=rows).map(|i| self.row_prefix(i, cols)).collect()
    }
}

impl fmt::Debug for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.rows {
            Rows::Identity => "identity",
            Rows::AllOnesFirstRow => "all-ones-first-row",
            Rows::Dense(_) => "dense",
            Rows::Custom { .. } => "custom",
        };
        f.debug_struct("GenMatrix")
            .field("q", &self.q.get())
            .field("kind", &kind)
            .field("block", &self.dense_block())
            .finish()
    }
}

impl PartialEq for GenMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.q != other.q {
            return false;
        }
        match (&self.rows, &other.rows) {
            (Rows::Identity, Rows::Identity) => true,
            (Rows::AllOnesFirstRow, Rows::AllOnesFirstRow) => true,
            (Rows::Dense(a), Rows::Dense(b)) => a == b,
            (Rows::Custom { source: a, .. }, Rows::Custom { source: b, .. }) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

/// First `depth` coordinates of `C * digits` over `Z_q`.
///
/// `digits` are the base-`q` digits of the index, least significant first;
/// entries past the slice are zero, so only the first `digits.len()` columns
/// of `C` are ever read.
pub fn mat_vec_mod_q(c: &GenMatrix, digits: &[u64], depth: usize) -> Result<Vec<u64>> {
    let q = c.modulus();
    for &d in digits {
        q.check(d)?;
    }
    let len = digits.iter().rposition(|&d| d != 0).map_or(0, |p| p + 1);
    let digits = &digits[..len];
    let mut out = Vec::with_capacity(depth);
    match &c.rows {
        Rows::Identity => out.extend((0..depth).map(|i| digits.get(i).copied().unwrap_or(0))),
        Rows::AllOnesFirstRow => {
            for i in 0..depth {
                let v = if i == 0 {
                    digits.iter().fold(0, |acc, &d| q.add(acc, d))
                } else {
                    digits.get(i).copied().unwrap_or(0)
                };
                out.push(v);
            }
        }
        _ => {
            for i in 1..=depth {
                let row = c.row_prefix(i, len)?;
                let v = row
                    .iter()
                    .zip(digits)
                    .fold(0, |acc, (&e, &d)| q.add(acc, q.mul(e, d)));
                out.push(v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::digits;

    fn p(q: u64) -> Prime {
        Prime::new(q).unwrap()
    }

    #[test]
    fn identity_over_z2() {
        let c = GenMatrix::identity(p(2));
        assert_eq!(mat_vec_mod_q(&c, &[1, 1, 0], 3).unwrap(), vec![1, 1, 0]);
    }

    #[test]
    fn zero_digits_give_zero_vector() {
        let c = GenMatrix::all_ones_first_row(p(3));
        assert_eq!(mat_vec_mod_q(&c, &[], 4).unwrap(), vec![0; 4]);
        assert_eq!(mat_vec_mod_q(&c, &[0, 0], 4).unwrap(), vec![0; 4]);
    }

    #[test]
    fn all_ones_first_row_on_four_base_three() {
        let c = GenMatrix::all_ones_first_row(p(3));
        let d = digits(4, 3);
        assert_eq!(d, vec![1, 1]);
        assert_eq!(mat_vec_mod_q(&c, &d, 2).unwrap(), vec![2, 1]);
    }

    #[test]
    fn rejects_out_of_range_digits() {
        let c = GenMatrix::identity(p(3));
        assert_eq!(
            mat_vec_mod_q(&c, &[1, 3], 2),
            Err(Error::DigitOutOfRange { value: 3, q: 3 })
        );
    }

    #[test]
    fn dense_matrix_padding_and_support() {
        let c = GenMatrix::dense(p(5), vec![vec![1, 2], vec![0, 0, 4]]).unwrap();
        assert!(c.is_finite_row());
        assert_eq!(c.row_support(1), Some(2));
        assert_eq!(c.row_support(2), Some(3));
        assert_eq!(c.row_support(7), Some(0));
        // row 1: 1*3 + 2*4 = 11 = 1 mod 5; row 2: 0 (digit 3 beyond is zero)
        assert_eq!(mat_vec_mod_q(&c, &[3, 4, 0, 0], 3).unwrap(), vec![1, 0, 0]);
        // padding beyond the last nonzero digit does not matter
        assert_eq!(
            mat_vec_mod_q(&c, &[3, 4], 3).unwrap(),
            mat_vec_mod_q(&c, &[3, 4, 0, 0, 0, 0], 3).unwrap()
        );
        assert!(GenMatrix::dense(p(5), vec![vec![5]]).is_err());
    }

    struct Shifted;
    impl RowGenerator for Shifted {
        fn row_prefix(&self, row: usize, depth: usize) -> Vec<u64> {
            (1..=depth).map(|c| u64::from(c == row + 1)).collect()
        }
        fn last_nonzero(&self, row: usize) -> Option<usize> {
            Some(row + 1)
        }
    }

    #[test]
    fn custom_generator_is_read_lazily() {
        let c = GenMatrix::custom(p(2), Arc::new(Shifted), true);
        assert!(c.is_finite_row());
        assert_eq!(c.row_support(3), Some(4));
        // y_i = n_{i} (shift by one digit)
        assert_eq!(mat_vec_mod_q(&c, &[1, 0, 1], 3).unwrap(), vec![0, 1, 0]);
        assert_eq!(c.block(2, 3).unwrap(), vec![vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn deeper_calls_extend_shallower_ones() {
        let c = GenMatrix::all_ones_first_row(p(3));
        for n in 0..200u64 {
            let d = digits(n, 3);
            let deep = mat_vec_mod_q(&c, &d, 9).unwrap();
            for m in 1..9 {
                assert_eq!(mat_vec_mod_q(&c, &d, m).unwrap()[..], deep[..m]);
            }
        }
    }
}
