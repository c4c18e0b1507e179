//! Largest all-ones diamond location.
//!
//! A diamond of side L centered at (i,j) is the set of cells (p,q)
//! with |p−i|+|q−j| < L. Two routes compute it: the four-triangle
//! decomposition (min over per-direction triangle tables) and the
//! top-cell recurrence, plus a generic engine over the latter.

use crate::grid::{BinaryGrid, Cell, ValueTable};

/// Orientation of an isosceles right triangle of 1s: the direction the
/// hypotenuse faces away from the right-angle cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Nw,
    Ne,
    Sw,
    Se,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Nw, Direction::Ne, Direction::Sw, Direction::Se];

    pub fn name(self) -> &'static str {
        match self {
            Direction::Nw => "nw",
            Direction::Ne => "ne",
            Direction::Sw => "sw",
            Direction::Se => "se",
        }
    }

    /// Row/column step towards the triangle interior.
    fn steps(self) -> (i64, i64) {
        match self {
            Direction::Nw => (-1, -1),
            Direction::Ne => (-1, 1),
            Direction::Sw => (1, -1),
            Direction::Se => (1, 1),
        }
    }
}

/// A located diamond: its uppermost cell, center, and side length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DiamondResult {
    pub top_cell: Cell,
    pub center: Cell,
    pub side: u32,
}

/// A local rule for the generic top-cell diamond engine at (i, j):
/// receives A(i,j), the three cells below (out-of-grid as `None`), the
/// three table values below, and the value two rows straight down
/// (out-of-grid as 0). The last argument is what lets a rule bound the
/// bottom half of a diamond.
pub struct DiamondRule {
    pub f_d: fn(cell: u8, below: [Option<u8>; 3], d_below: [u32; 3], d_two_below: u32) -> u32,
}

/// T(i,j): side of the largest triangle of 1s with its right angle at
/// (i,j), oriented towards `dir`. For SE this is 0 if A(i,j)=0, else
/// 1 + min{T(i+1,j), T(i,j+1)}; other directions by reflection.
pub fn compute_triangle_table(g: &BinaryGrid, dir: Direction) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let (dr, dc) = dir.steps();
    let mut t = ValueTable::zeros(m, n);
    let rows: Vec<usize> = if dr > 0 {
        (1..=m).rev().collect()
    } else {
        (1..=m).collect()
    };
    let cols: Vec<usize> = if dc > 0 {
        (1..=n).rev().collect()
    } else {
        (1..=n).collect()
    };
    for &i in &rows {
        for &j in &cols {
            let v = if g.at(i, j) == 0 {
                0
            } else {
                let ri = (i as i64 + dr).max(0) as usize;
                let cj = (j as i64 + dc).max(0) as usize;
                1 + t.get(ri, j).min(t.get(i, cj))
            };
            t.set(i, j, v);
        }
    }
    t
}

/// C(i,j): side of the largest all-ones diamond centered at (i,j),
/// as the min over the four triangle tables.
pub fn compute_diamond_center_table(g: &BinaryGrid) -> ValueTable {
    let tables: Vec<ValueTable> = Direction::ALL
        .iter()
        .map(|&d| compute_triangle_table(g, d))
        .collect();
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let v = tables.iter().map(|t| t.get(i, j)).min().unwrap();
            t.set(i, j, v);
        }
    }
    t
}

/// D(i,j): side of the largest all-ones diamond whose uppermost cell
/// is (i,j). 0 if A(i,j)=0, else
/// 1 + min{D(i+1,j−1), D(i+1,j), D(i+1,j+1), D(i+2,j)}.
///
/// A diamond of side L topped at (i,j) is exactly the union of its top
/// cell with four side-(L−1) diamonds topped at the three cells of the
/// next row and at (i+2,j); the last term is what caps the bottom half
/// (without it the min over one row computes downward triangles).
pub fn compute_diamond_top_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in 1..=n {
            let v = if g.at(i, j) == 0 {
                0
            } else {
                let left = if j > 1 { t.get(i + 1, j - 1) } else { 0 };
                1 + left
                    .min(t.get(i + 1, j))
                    .min(t.get(i + 1, j + 1))
                    .min(t.get(i + 2, j))
            };
            t.set(i, j, v);
        }
    }
    t
}

/// Runs a generic [`DiamondRule`] bottom-up (rows m→1); column order
/// within a row is free since the rule reads only rows i+1 and i+2.
pub fn run_diamond_engine(g: &BinaryGrid, rule: &DiamondRule) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in 1..=n {
            let below = [
                if j > 1 { g.get(i + 1, j - 1) } else { None },
                g.get(i + 1, j),
                g.get(i + 1, j + 1),
            ];
            let d_below = [
                if j > 1 { t.get(i + 1, j - 1) } else { 0 },
                t.get(i + 1, j),
                t.get(i + 1, j + 1),
            ];
            t.set(i, j, (rule.f_d)(g.at(i, j), below, d_below, t.get(i + 2, j)));
        }
    }
    t
}

/// Rule reproducing [`compute_diamond_top_table`] through the engine.
pub fn top_cell_rule() -> DiamondRule {
    DiamondRule {
        f_d: |cell, _below, d_below, d_two_below| {
            if cell == 0 {
                0
            } else {
                1 + d_below.iter().copied().min().unwrap().min(d_two_below)
            }
        },
    }
}

/// Largest diamond overall, from the top-cell table. Ties broken by
/// smallest row then column of the top cell; `None` when the grid has
/// no 1s.
pub fn best_diamond(g: &BinaryGrid) -> Option<DiamondResult> {
    let t = compute_diamond_top_table(g);
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

/// Checks that every cell of the diamond of side L centered at
/// `center` is in-grid and holds a 1.
pub fn diamond_matches(g: &BinaryGrid, center: Cell, side: u32) -> bool {
    if side == 0 {
        return false;
    }
    let l = side as i64;
    let (ci, cj) = (center.row as i64, center.col as i64);
    for p in (ci - l + 1)..=(ci + l - 1) {
        for q in (cj - l + 1)..=(cj + l - 1) {
            if (p - ci).abs() + (q - cj).abs() < l {
                if p < 1 || q < 1 {
                    return false;
                }
                match g.get(p as usize, q as usize) {
                    Some(1) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::parse_binary_grid;

    fn grid(text: &str) -> BinaryGrid {
        parse_binary_grid(text).unwrap()
    }

    #[test]
    fn triangle_se_examples() {
        // The fixture exposing the printed recurrence's over-strictness:
        // the side-2 SE triangle at (1,1) only needs (1,1),(1,2),(2,1).
        let t = compute_triangle_table(&grid("2 2\n11\n10"), Direction::Se);
        assert_eq!(t.get(1, 1), 2);

        for d in Direction::ALL {
            assert_eq!(compute_triangle_table(&grid("1 1\n0"), d).to_rows(), vec![vec![0]]);
        }

        let t = compute_triangle_table(&grid("3 3\n111\n111\n111"), Direction::Se);
        assert_eq!(t.get(1, 1), 3);
        assert_eq!(t.get(2, 2), 2);
        assert_eq!(t.get(3, 3), 1);
    }

    #[test]
    fn triangle_reflection_symmetry() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let m = rng.gen_range(1..=7);
            let n = rng.gen_range(1..=7);
            let cells: Vec<u8> = (0..m * n).map(|_| rng.gen_range(0..=1)).collect();
            let g = BinaryGrid::new(m, n, cells.clone());
            let flipped_cells: Vec<u8> = (0..m)
                .flat_map(|i| (0..n).map(move |j| (m - 1 - i, n - 1 - j)))
                .map(|(i, j)| cells[i * n + j])
                .collect();
            let gf = BinaryGrid::new(m, n, flipped_cells);

            let nw = compute_triangle_table(&g, Direction::Nw);
            let se_f = compute_triangle_table(&gf, Direction::Se);
            for i in 1..=m {
                for j in 1..=n {
                    assert_eq!(nw.get(i, j), se_f.get(m + 1 - i, n + 1 - j));
                }
            }
            let ne = compute_triangle_table(&g, Direction::Ne);
            let sw_f = compute_triangle_table(&gf, Direction::Sw);
            for i in 1..=m {
                for j in 1..=n {
                    assert_eq!(ne.get(i, j), sw_f.get(m + 1 - i, n + 1 - j));
                }
            }
        }
    }

    #[test]
    fn center_table_examples() {
        let t = compute_diamond_center_table(&grid("3 3\n111\n111\n111"));
        assert_eq!(t.get(2, 2), 2);

        let t = compute_diamond_center_table(&grid("3 3\n000\n010\n000"));
        assert_eq!(t.get(2, 2), 1);
        assert_eq!(t.get(1, 1), 0);

        let t = compute_diamond_center_table(&grid("2 2\n00\n00"));
        assert!(t.to_rows().iter().all(|r| r.iter().all(|&v| v == 0)));
    }

    #[test]
    fn top_table_examples() {
        let t = compute_diamond_top_table(&grid("3 3\n111\n111\n111"));
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 1), 1);

        let t = compute_diamond_top_table(&grid("2 2\n01\n11"));
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.get(2, 1), 1);
        assert_eq!(t.get(2, 2), 1);
    }

    #[test]
    fn top_table_bottom_boundary() {
        // A side-2 diamond topped at (1,2) would need a third row;
        // dropping the two-rows-down term would wrongly report 2 here.
        let t = compute_diamond_top_table(&grid("2 3\n010\n111"));
        assert_eq!(t.get(1, 2), 1);

        // Same shape with the bottom cell present: side 2 fits.
        let t = compute_diamond_top_table(&grid("3 3\n010\n111\n010"));
        assert_eq!(t.get(1, 2), 2);
    }

    #[test]
    fn engine_matches_top_table() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let m = rng.gen_range(1..=8);
            let n = rng.gen_range(1..=8);
            let cells: Vec<u8> = (0..m * n).map(|_| rng.gen_range(0..=1)).collect();
            let g = BinaryGrid::new(m, n, cells);
            assert_eq!(run_diamond_engine(&g, &top_cell_rule()), compute_diamond_top_table(&g));
        }
    }

    #[test]
    fn engine_degenerate_rules() {
        let g = grid("2 3\n101\n110");
        let zero = DiamondRule { f_d: |_, _, _, _| 0 };
        assert!(run_diamond_engine(&g, &zero)
            .to_rows()
            .iter()
            .all(|r| r.iter().all(|&v| v == 0)));

        let copy = DiamondRule {
            f_d: |cell, _, _, _| cell as u32,
        };
        let t = run_diamond_engine(&g, &copy);
        for i in 1..=2 {
            for j in 1..=3 {
                assert_eq!(t.get(i, j), g.at(i, j) as u32);
            }
        }
    }

    #[test]
    fn best_diamond_examples() {
        let g = grid("5 5\n11111\n11111\n11111\n11111\n11111");
        let r = best_diamond(&g).unwrap();
        assert_eq!(r.side, 3);
        assert_eq!(r.top_cell, Cell::new(1, 3));
        assert_eq!(r.center, Cell::new(3, 3));
        assert!(diamond_matches(&g, r.center, r.side));
        assert!(!diamond_matches(&g, r.center, r.side + 1));

        assert!(best_diamond(&grid("2 2\n00\n00")).is_none());

        let r = best_diamond(&grid("3 3\n000\n010\n000")).unwrap();
        assert_eq!(r.side, 1);
        assert_eq!(r.top_cell, Cell::new(2, 2));
    }
}
