//! Largest-area axis-parallel empty rectangle among n points inside
//! `[0, Xmax] × [0, Ymax]`.
//!
//! The points are coordinate-compressed into a (2n+1)×(2n+1) logical
//! grid whose rows and columns carry real heights and widths; each
//! point lands alone in a zero-area odd-indexed cell. A per-row
//! histogram scan over accumulated empty heights then finds the
//! maximum-area all-empty rectangle in O(n²) total.

use crate::grid::PointSet;

/// The coordinate-compressed logical grid. Indices run 0..=2n per
/// axis; odd rows/columns have zero extent and hold the points.
#[derive(Debug, Clone)]
pub struct CompressedGrid {
    pub size: usize,
    pub col_widths: Vec<f64>,
    pub row_heights: Vec<f64>,
    /// Sorted x coordinates with the 0 and Xmax sentinels (n+2 values).
    pub x_coords: Vec<f64>,
    /// Sorted y coordinates with the 0 and Ymax sentinels.
    pub y_coords: Vec<f64>,
    /// (row, col) pairs of occupied cells; both indices odd.
    pub occupied: Vec<(usize, usize)>,
}

impl CompressedGrid {
    /// Exact continuous coordinate of the left edge of column j.
    pub fn col_left(&self, j: usize) -> f64 {
        self.x_coords[(j + 1) / 2]
    }

    /// Exact continuous coordinate of the right edge of column j.
    pub fn col_right(&self, j: usize) -> f64 {
        self.x_coords[j / 2 + 1]
    }

    /// Exact continuous coordinate of the bottom edge of row i.
    pub fn row_bottom(&self, i: usize) -> f64 {
        self.y_coords[(i + 1) / 2]
    }

    /// Exact continuous coordinate of the top edge of row i.
    pub fn row_top(&self, i: usize) -> f64 {
        self.y_coords[i / 2 + 1]
    }
}

/// A located empty rectangle in continuous coordinates.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EmptyRectResult {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
    pub area: f64,
    /// Set when every candidate rectangle has zero area.
    pub degenerate: bool,
}

/// Ranks each point's coordinate in the sorted list of that axis,
/// duplicates ordered by input index. Returns 1-based ranks.
fn stable_ranks(coords: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..coords.len()).collect();
    order.sort_by(|&a, &b| coords[a].partial_cmp(&coords[b]).unwrap().then(a.cmp(&b)));
    let mut ranks = vec![0; coords.len()];
    for (rank, &idx) in order.iter().enumerate() {
        ranks[idx] = rank + 1;
    }
    ranks
}

/// Sorted coordinates with 0 and `max` sentinels appended: the list
/// x_0=0, x_1..x_n sorted, x_{n+1}=max.
fn with_sentinels(coords: &[f64], max: f64) -> Vec<f64> {
    let mut sorted: Vec<f64> = coords.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out = Vec::with_capacity(coords.len() + 2);
    out.push(0.0);
    out.extend(sorted);
    out.push(max);
    out
}

/// Per-axis extents: index 2k is the gap between sorted coordinates
/// k and k+1 (sentinels included), odd indices are 0.
fn extents(sorted: &[f64]) -> Vec<f64> {
    let n = sorted.len() - 2;
    let mut out = vec![0.0; 2 * n + 1];
    for k in 0..=n {
        out[2 * k] = sorted[k + 1] - sorted[k];
    }
    out
}

/// Builds the compressed grid for a point set.
pub fn compress(ps: &PointSet) -> CompressedGrid {
    let n = ps.len();
    let xs: Vec<f64> = ps.points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = ps.points.iter().map(|p| p.1).collect();
    let x_coords = with_sentinels(&xs, ps.xmax);
    let y_coords = with_sentinels(&ys, ps.ymax);
    let col_widths = extents(&x_coords);
    let row_heights = extents(&y_coords);
    let rx = stable_ranks(&xs);
    let ry = stable_ranks(&ys);
    let occupied = (0..n).map(|k| (2 * ry[k] - 1, 2 * rx[k] - 1)).collect();
    CompressedGrid {
        size: 2 * n + 1,
        col_widths,
        row_heights,
        x_coords,
        y_coords,
        occupied,
    }
}

/// Maximum-area rectangle under a histogram with per-column widths:
/// the best contiguous span [a..=b] of (min height over span) × (sum
/// of widths over span). Returns (area, a, b, height) with 0-based
/// indices; (0.0, 0, 0, 0.0) for empty input.
pub fn histogram_max_area(heights: &[f64], widths: &[f64]) -> (f64, usize, usize, f64) {
    assert_eq!(heights.len(), widths.len());
    let c = heights.len();
    if c == 0 {
        return (0.0, 0, 0, 0.0);
    }
    let mut prefw = vec![0.0; c + 1];
    for j in 0..c {
        prefw[j + 1] = prefw[j] + widths[j];
    }

    let mut best = (0.0_f64, 0usize, 0usize, 0.0_f64);
    let mut have_best = false;
    let mut consider = |area: f64, a: usize, b: usize, h: f64| {
        if !have_best || area > best.0 || (area == best.0 && (a, b) < (best.1, best.2)) {
            best = (area, a, b, h);
            have_best = true;
        }
    };

    // Monotone stack of (start index, height); popping a bar fixes the
    // maximal span where it is the minimum.
    let mut stack: Vec<(usize, f64)> = Vec::new();
    for j in 0..=c {
        let h = if j < c { heights[j] } else { -1.0 };
        let mut start = j;
        while let Some(&(s, sh)) = stack.last() {
            if sh < h {
                break;
            }
            stack.pop();
            let area = sh * (prefw[j] - prefw[s]);
            consider(area, s, j - 1, sh);
            start = s;
        }
        if j < c {
            stack.push((start, h));
        }
    }
    best
}

/// Finds the maximum-area empty rectangle for a point set, in
/// continuous coordinates.
pub fn max_empty_rectangle(ps: &PointSet) -> EmptyRectResult {
    let cg = compress(ps);
    let size = cg.size;
    let mut occupied = vec![false; size * size];
    for &(r, c) in &cg.occupied {
        occupied[r * size + c] = true;
    }

    // ch[j]: empty vertical extent on column j ending at the current
    // row; run_start[j]: the row where that extent began. Edges are
    // mapped back to the exact sorted coordinates (never by arithmetic
    // on accumulated heights, which would drift off the point
    // coordinates by rounding).
    let mut ch = vec![0.0; size];
    let mut run_start = vec![0usize; size];
    let mut best: Option<(f64, f64, f64, f64, f64)> = None; // (area, x1, y1, x2, y2)
    for i in 0..size {
        for j in 0..size {
            if occupied[i * size + j] {
                ch[j] = 0.0;
                run_start[j] = i + 1;
            } else {
                ch[j] += cg.row_heights[i];
            }
        }
        let (area, a, b, h) = histogram_max_area(&ch, &cg.col_widths);
        let better = match best {
            None => true,
            Some((ba, ..)) => area > ba,
        };
        if better {
            // The limiting column carries the span's min height; its
            // run start row gives the exact bottom edge.
            let limiting = (a..=b).find(|&j| ch[j] == h).unwrap_or(a);
            let x1 = cg.col_left(a);
            let x2 = cg.col_right(b);
            let y1 = cg.row_bottom(run_start[limiting]);
            let y2 = cg.row_top(i);
            best = Some((area, x1, y1, x2, y2));
        }
    }

    match best {
        Some((area, x1, y1, x2, y2)) if area > 0.0 => EmptyRectResult {
            x1,
            y1,
            x2,
            y2,
            area,
            degenerate: false,
        },
        _ => EmptyRectResult {
            x1: 0.0,
            y1: 0.0,
            x2: 0.0,
            y2: 0.0,
            area: 0.0,
            degenerate: true,
        },
    }
}

/// True when no point of `ps` lies strictly inside the open rectangle.
pub fn rect_is_empty(ps: &PointSet, x1: f64, y1: f64, x2: f64, y2: f64) -> bool {
    ps.points
        .iter()
        .all(|&(x, y)| !(x > x1 && x < x2 && y > y1 && y < y2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::parse_points;

    #[test]
    fn compress_no_points() {
        let cg = compress(&parse_points("0 10 5").unwrap());
        assert_eq!(cg.size, 1);
        assert_eq!(cg.col_widths, vec![10.0]);
        assert_eq!(cg.row_heights, vec![5.0]);
        assert!(cg.occupied.is_empty());
    }

    #[test]
    fn compress_single_centered_point() {
        let cg = compress(&parse_points("1 1 1\n0.5 0.5").unwrap());
        assert_eq!(cg.size, 3);
        assert_eq!(cg.col_widths, vec![0.5, 0.0, 0.5]);
        assert_eq!(cg.row_heights, vec![0.5, 0.0, 0.5]);
        assert_eq!(cg.occupied, vec![(1, 1)]);
    }

    #[test]
    fn compress_duplicate_x() {
        let cg = compress(&parse_points("2 1 1\n0.3 0.2\n0.3 0.8").unwrap());
        assert_eq!(cg.size, 5);
        // Both points share x = 0.3: distinct odd columns with a
        // zero-width even column between them.
        assert_eq!(cg.col_widths, vec![0.3, 0.0, 0.0, 0.0, 0.7]);
        let cols: Vec<usize> = cg.occupied.iter().map(|&(_, c)| c).collect();
        assert_eq!(cols, vec![1, 3]);
        let conservation: f64 = cg.col_widths.iter().sum();
        assert!((conservation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn histogram_examples() {
        let (area, a, b, _) = histogram_max_area(&[3.0, 3.0], &[2.0, 1.0]);
        assert_eq!(area, 9.0);
        assert_eq!((a, b), (0, 1));

        let (area, a, b, _) = histogram_max_area(&[3.0, 1.0], &[1.0, 1.0]);
        assert_eq!(area, 3.0);
        assert_eq!((a, b), (0, 0));

        assert_eq!(histogram_max_area(&[], &[]).0, 0.0);
    }

    #[test]
    fn histogram_matches_span_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let c = rng.gen_range(1..=8);
            let heights: Vec<f64> = (0..c).map(|_| rng.gen_range(0.0..5.0)).collect();
            let widths: Vec<f64> = (0..c)
                .map(|_| if rng.gen_bool(0.2) { 0.0 } else { rng.gen_range(0.0..3.0) })
                .collect();
            let fast = histogram_max_area(&heights, &widths);

            // O(c^2) span enumeration.
            let mut oracle = 0.0_f64;
            for a in 0..c {
                let mut minh = f64::INFINITY;
                let mut wsum = 0.0;
                for b in a..c {
                    minh = minh.min(heights[b]);
                    wsum += widths[b];
                    oracle = oracle.max(minh * wsum);
                }
            }
            assert!(
                (fast.0 - oracle).abs() <= 1e-9 * oracle.max(1.0),
                "fast {} vs oracle {}",
                fast.0,
                oracle
            );
            // The returned span really achieves the returned area.
            let minh = heights[fast.1..=fast.2]
                .iter()
                .fold(f64::INFINITY, |m, &h| m.min(h));
            let wsum: f64 = widths[fast.1..=fast.2].iter().sum();
            assert!((fast.0 - minh * wsum).abs() <= 1e-9 * oracle.max(1.0));
        }
    }

    #[test]
    fn empty_rect_no_obstacles() {
        let r = max_empty_rectangle(&parse_points("0 10 5").unwrap());
        assert_eq!(r.area, 50.0);
        assert_eq!((r.x1, r.y1, r.x2, r.y2), (0.0, 0.0, 10.0, 5.0));
        assert!(!r.degenerate);
    }

    #[test]
    fn empty_rect_single_point() {
        let r = max_empty_rectangle(&parse_points("1 1 1\n0.5 0.5").unwrap());
        assert!((r.area - 0.5).abs() < 1e-12, "area {}", r.area);
    }

    #[test]
    fn empty_rect_corner_points() {
        let ps = parse_points("4 10 5\n0 0\n10 0\n0 5\n10 5").unwrap();
        let r = max_empty_rectangle(&ps);
        // Corner points sit on the contour, not inside.
        assert!((r.area - 50.0).abs() < 1e-12);
    }

    #[test]
    fn empty_rect_degenerate_domain() {
        let r = max_empty_rectangle(&parse_points("0 0 5").unwrap());
        assert_eq!(r.area, 0.0);
        assert!(r.degenerate);
    }
}
