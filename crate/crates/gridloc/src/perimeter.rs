//! Maximum perimeter-sum subrectangle (at least 2 rows and 2 columns)
//! of a real matrix, in O(m²·n) time and O(n) extra space per row pair.

use crate::error::Error;
use crate::grid::RealGrid;

/// A located rectangle and its boundary sum. Rows l1 < l2, columns
/// c1 < c2, all 1-based inclusive.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PerimeterResult {
    pub l1: usize,
    pub l2: usize,
    pub c1: usize,
    pub c2: usize,
    pub value: f64,
}

/// Per-column prefix sums: S(i, j) = sum of column j over rows 1..=i,
/// with S(0, j) = 0.
#[derive(Debug, Clone)]
pub struct ColumnPrefixSums {
    n: usize,
    // (m+1) x n, row-major, row 0 all zeros.
    sums: Vec<f64>,
}

impl ColumnPrefixSums {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(j >= 1 && j <= self.n);
        self.sums[i * self.n + (j - 1)]
    }

    /// Sum of column j over rows l1..=l2.
    pub fn column_span(&self, l1: usize, l2: usize, j: usize) -> f64 {
        self.get(l2, j) - self.get(l1 - 1, j)
    }
}

pub fn column_prefix_sums(b: &RealGrid) -> ColumnPrefixSums {
    let (m, n) = (b.rows(), b.cols());
    let mut sums = vec![0.0; (m + 1) * n];
    for i in 1..=m {
        for j in 1..=n {
            sums[i * n + (j - 1)] = b.at(i, j) + sums[(i - 1) * n + (j - 1)];
        }
    }
    ColumnPrefixSums { n, sums }
}

/// Finds the subrectangle (≥2 rows, ≥2 columns) maximizing the sum of
/// its boundary cells. Ties broken by smallest (l1, l2, c1, c2)
/// lexicographically.
pub fn max_perimeter_rectangle(b: &RealGrid) -> Result<PerimeterResult, Error> {
    let (m, n) = (b.rows(), b.cols());
    if m < 2 || n < 2 {
        return Err(Error::NoValidRectangle);
    }
    let s = column_prefix_sums(b);

    let mut best: Option<PerimeterResult> = None;
    for l1 in 1..m {
        for l2 in (l1 + 1)..=m {
            // u: best quasi-rectangle extending to the current column,
            // with the start column that achieves it.
            let mut u = s.column_span(l1, l2, 1);
            let mut u_start = 1;
            for j in 2..=n {
                let v = s.column_span(l1, l2, j);
                let w = u + v;
                let cand = PerimeterResult {
                    l1,
                    l2,
                    c1: u_start,
                    c2: j,
                    value: w,
                };
                let better = match &best {
                    None => true,
                    Some(b) => {
                        w > b.value
                            || (w == b.value
                                && (cand.l1, cand.l2, cand.c1, cand.c2)
                                    < (b.l1, b.l2, b.c1, b.c2))
                    }
                };
                if better {
                    best = Some(cand);
                }

                let extended = u + b.at(l1, j) + b.at(l2, j);
                // On ties keep the carried (smaller) start column.
                if v > extended {
                    u = v;
                    u_start = j;
                } else {
                    u = extended;
                }
            }
        }
    }
    Ok(best.unwrap())
}

/// Recomputes the boundary sum of a rectangle directly from the matrix.
pub fn boundary_sum(b: &RealGrid, l1: usize, l2: usize, c1: usize, c2: usize) -> f64 {
    let mut sum = 0.0;
    for i in l1..=l2 {
        for j in c1..=c2 {
            if i == l1 || i == l2 || j == c1 || j == c2 {
                sum += b.at(i, j);
            }
        }
    }
    sum
}
