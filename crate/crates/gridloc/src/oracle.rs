//! Brute-force reference implementations, built from the geometric
//! definitions of each problem rather than the recurrences they are
//! tested against. Exponential or polynomial blow-ups are acceptable
//! here; these run on small inputs only (the CLI `check` command and
//! the differential test suites).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::depth::ConnectivityConvention;
use crate::diamonds::{DiamondResult, Direction};
use crate::empty_rect::EmptyRectResult;
use crate::grid::{BinaryGrid, Cell, PointSet, RealGrid, ValueTable};
use crate::perimeter::PerimeterResult;
use crate::squares::{SquarePattern, SquareResult};

fn pattern_holds(g: &BinaryGrid, i0: usize, j0: usize, side: usize, pattern: SquarePattern) -> bool {
    if i0 + side - 1 > g.rows() || j0 + side - 1 > g.cols() {
        return false;
    }
    for di in 0..side {
        for dj in 0..side {
            let v = g.at(i0 + di, j0 + dj);
            let ok = match pattern {
                SquarePattern::Monotone => v == g.at(i0, j0),
                SquarePattern::Chessboard => {
                    if (di + dj) % 2 == 0 {
                        v == g.at(i0, j0)
                    } else {
                        v != g.at(i0, j0)
                    }
                }
                SquarePattern::Identity => {
                    if di == dj {
                        v == 1
                    } else {
                        v == 0
                    }
                }
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Per-corner largest pattern-square side, by direct enumeration.
pub fn oracle_square_table(g: &BinaryGrid, pattern: SquarePattern) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let mut best = 0;
            for side in 1..=m.min(n) {
                if pattern_holds(g, i, j, side, pattern) {
                    best = side as u32;
                }
            }
            t.set(i, j, best);
        }
    }
    t
}

pub fn oracle_best_square(g: &BinaryGrid, pattern: SquarePattern) -> Option<SquareResult> {
    let t = oracle_square_table(g, pattern);
    let (corner, side) = t.max_cell();
    if side == 0 {
        return None;
    }
    Some(SquareResult {
        corner,
        side,
        pattern,
    })
}

fn triangle_holds(g: &BinaryGrid, i: usize, j: usize, l: usize, dir: Direction) -> bool {
    let (sr, sc): (i64, i64) = match dir {
        Direction::Nw => (-1, -1),
        Direction::Ne => (-1, 1),
        Direction::Sw => (1, -1),
        Direction::Se => (1, 1),
    };
    for a in 0..l as i64 {
        for b in 0..(l as i64 - a) {
            let (p, q) = (i as i64 + sr * a, j as i64 + sc * b);
            if p < 1 || q < 1 {
                return false;
            }
            if g.get(p as usize, q as usize) != Some(1) {
                return false;
            }
        }
    }
    true
}

/// Per-cell largest triangle side, by the cell-set definition.
pub fn oracle_triangle_table(g: &BinaryGrid, dir: Direction) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let mut best = 0;
            for l in 1..=m.min(n) {
                if triangle_holds(g, i, j, l, dir) {
                    best = l as u32;
                }
            }
            t.set(i, j, best);
        }
    }
    t
}

fn diamond_holds(g: &BinaryGrid, ci: i64, cj: i64, l: i64) -> bool {
    for p in (ci - l + 1)..=(ci + l - 1) {
        for q in (cj - l + 1)..=(cj + l - 1) {
            if (p - ci).abs() + (q - cj).abs() < l {
                if p < 1 || q < 1 || p > g.rows() as i64 || q > g.cols() as i64 {
                    return false;
                }
                if g.at(p as usize, q as usize) != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Per-center largest diamond side, by the |p−i|+|q−j| < L definition.
pub fn oracle_diamond_center_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let mut best = 0;
            let mut l = 1;
            while diamond_holds(g, i as i64, j as i64, l) {
                best = l as u32;
                l += 1;
            }
            t.set(i, j, best);
        }
    }
    t
}

/// Per-top-cell largest diamond side: a diamond of side L topped at
/// (i,j) is centered at (i+L−1, j).
pub fn oracle_diamond_top_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let mut best = 0;
            for l in 1..=(m.max(n) as i64) {
                if diamond_holds(g, i as i64 + l - 1, j as i64, l) {
                    best = l as u32;
                }
            }
            t.set(i, j, best);
        }
    }
    t
}

pub fn oracle_best_diamond(g: &BinaryGrid) -> Option<DiamondResult> {
    let t = oracle_diamond_top_table(g);
    let (top, side) = t.max_cell();
    if side == 0 {
        return None;
    }
    Some(DiamondResult {
        top_cell: top,
        center: Cell::new(top.row + side as usize - 1, top.col),
        side,
    })
}

/// Enumerates all rectangles with sides drawn from the sentinel-
/// extended coordinate lists, keeping the largest whose open interior
/// holds no point. Intended for n ≤ 10 or so.
pub fn oracle_empty_rectangle(ps: &PointSet) -> EmptyRectResult {
    let mut xs: Vec<f64> = ps.points.iter().map(|p| p.0).collect();
    xs.push(0.0);
    xs.push(ps.xmax);
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    let mut ys: Vec<f64> = ps.points.iter().map(|p| p.1).collect();
    ys.push(0.0);
    ys.push(ps.ymax);
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.dedup();

    let mut best: Option<(f64, f64, f64, f64, f64)> = None;
    for (ai, &x1) in xs.iter().enumerate() {
        for &x2 in &xs[ai + 1..] {
            for (ci, &y1) in ys.iter().enumerate() {
                for &y2 in &ys[ci + 1..] {
                    let empty = ps
                        .points
                        .iter()
                        .all(|&(x, y)| !(x > x1 && x < x2 && y > y1 && y < y2));
                    if !empty {
                        continue;
                    }
                    let area = (x2 - x1) * (y2 - y1);
                    if best.map_or(true, |(ba, ..)| area > ba) {
                        best = Some((area, x1, y1, x2, y2));
                    }
                }
            }
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

/// Enumerates all rectangles with ≥2 rows and columns, summing the
/// boundary cells directly. Intended for m, n ≤ 12.
pub fn oracle_perimeter(b: &RealGrid) -> Option<PerimeterResult> {
    let (m, n) = (b.rows(), b.cols());
    if m < 2 || n < 2 {
        return None;
    }
    let mut best: Option<PerimeterResult> = None;
    for l1 in 1..m {
        for l2 in (l1 + 1)..=m {
            for c1 in 1..n {
                for c2 in (c1 + 1)..=n {
                    let mut sum = 0.0;
                    for i in l1..=l2 {
                        for j in c1..=c2 {
                            if i == l1 || i == l2 || j == c1 || j == c2 {
                                sum += b.at(i, j);
                            }
                        }
                    }
                    if best.as_ref().map_or(true, |r| sum > r.value) {
                        best = Some(PerimeterResult {
                            l1,
                            l2,
                            c1,
                            c2,
                            value: sum,
                        });
                    }
                }
            }
        }
    }
    best
}

/// Depth map via single-source shortest paths with a priority queue:
/// a virtual outside-white node at distance 1, weight-0 edges to white
/// border cells, weight-1 edges to black border cells; between cells,
/// weight 0 for same-color moves and 1 for color crossings, movement
/// set chosen by the source cell's color.
pub fn oracle_depth(g: &BinaryGrid, conv: ConnectivityConvention) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut dist = vec![u32::MAX; m * n];
    let mut heap: BinaryHeap<Reverse<(u32, usize)>> = BinaryHeap::new();
    for i in 1..=m {
        for j in 1..=n {
            if i == 1 || i == m || j == 1 || j == n {
                let idx = (i - 1) * n + (j - 1);
                let d = if g.at(i, j) == 0 { 1 } else { 2 };
                if d < dist[idx] {
                    dist[idx] = d;
                    heap.push(Reverse((d, idx)));
                }
            }
        }
    }
    while let Some(Reverse((d, idx))) = heap.pop() {
        if d > dist[idx] {
            continue;
        }
        let (i, j) = (idx / n + 1, idx % n + 1);
        let here = g.at(i, j);
        for &(dr, dc) in conv.moves_for(here).offsets() {
            let (ni, nj) = (i as i64 + dr, j as i64 + dc);
            if ni < 1 || nj < 1 || ni > m as i64 || nj > n as i64 {
                continue;
            }
            let (ni, nj) = (ni as usize, nj as usize);
            let w = if g.at(ni, nj) == here { 0 } else { 1 };
            let nidx = (ni - 1) * n + (nj - 1);
            if d + w < dist[nidx] {
                dist[nidx] = d + w;
                heap.push(Reverse((d + w, nidx)));
            }
        }
    }
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            t.set(i, j, dist[(i - 1) * n + (j - 1)]);
        }
    }
    t
}
