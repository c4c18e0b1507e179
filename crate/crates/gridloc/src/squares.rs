//! Largest patterned-square location.
//!
//! Three concrete patterns (monotone, chessboard, identity-diagonal)
//! plus a generic local-rule engine that expresses all of them. Every
//! table is computed in a single bottom-up pass, rows m→1 and columns
//! n→1, with out-of-grid reads taken as 0 and out-of-grid cell
//! comparisons taken as mismatches.

use crate::grid::{BinaryGrid, Cell, ValueTable};

/// The square pattern being searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SquarePattern {
    /// All cells equal (to 0 or 1).
    Monotone,
    /// Cell values alternate on each row and column.
    Chessboard,
    /// 1s on the main diagonal, 0s everywhere else.
    Identity,
}

impl SquarePattern {
    pub fn name(self) -> &'static str {
        match self {
            SquarePattern::Monotone => "monotone",
            SquarePattern::Chessboard => "chessboard",
            SquarePattern::Identity => "identity",
        }
    }
}

/// A located square: upper-left corner and side length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SquareResult {
    pub corner: Cell,
    pub side: u32,
    pub pattern: SquarePattern,
}

/// Inputs available to a [`PatternRule`]'s `f_best` at cell (i, j).
///
/// Cell values for the 2×2 block rooted at (i, j); neighbors outside
/// the grid are `None`. Table reads outside the grid are 0.
#[derive(Debug, Clone, Copy)]
pub struct BestInputs {
    pub cell: u8,
    pub down: Option<u8>,
    pub right: Option<u8>,
    pub diag: Option<u8>,
    pub best_down: u32,
    pub best_right: u32,
    pub best_diag: u32,
    pub rm_here: u32,
    pub rm_right: u32,
    pub dm_here: u32,
    pub dm_down: u32,
}

/// A local rule driving the generic square engine: constant-time
/// functions producing the RM, DM and BEST tables.
pub struct PatternRule {
    pub f_rm: fn(cell: u8, rm_right: u32) -> u32,
    pub f_dm: fn(cell: u8, dm_down: u32) -> u32,
    pub f_best: fn(&BestInputs) -> u32,
}

/// RM(i,j): length of the longest run of consecutive 0s starting at
/// (i,j) and going right.
pub fn compute_rm_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in 1..=m {
        for j in (1..=n).rev() {
            let v = if g.at(i, j) == 1 { 0 } else { 1 + t.get(i, j + 1) };
            t.set(i, j, v);
        }
    }
    t
}

/// DM(i,j): length of the longest run of consecutive 0s starting at
/// (i,j) and going down.
pub fn compute_dm_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in 1..=n {
            let v = if g.at(i, j) == 1 { 0 } else { 1 + t.get(i + 1, j) };
            t.set(i, j, v);
        }
    }
    t
}

/// SQ(i,j): side of the largest monotone square with upper-left
/// corner (i,j).
pub fn compute_sq_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in (1..=n).rev() {
            let a = g.at(i, j);
            let matches = g.get(i + 1, j) == Some(a)
                && g.get(i, j + 1) == Some(a)
                && g.get(i + 1, j + 1) == Some(a);
            let v = if matches {
                1 + t.get(i + 1, j).min(t.get(i, j + 1)).min(t.get(i + 1, j + 1))
            } else {
                1
            };
            t.set(i, j, v);
        }
    }
    t
}

/// CB(i,j): side of the largest chessboard-patterned square with
/// upper-left corner (i,j).
pub fn compute_cb_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut t = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in (1..=n).rev() {
            let a = g.at(i, j);
            // Down/right neighbors must differ, the diagonal must match.
            let alternates = g.get(i + 1, j).map_or(false, |v| v != a)
                && g.get(i, j + 1).map_or(false, |v| v != a)
                && g.get(i + 1, j + 1) == Some(a);
            let v = if alternates {
                1 + t.get(i + 1, j).min(t.get(i, j + 1)).min(t.get(i + 1, j + 1))
            } else {
                1
            };
            t.set(i, j, v);
        }
    }
    t
}

/// IM(i,j): side of the largest square with upper-left corner (i,j),
/// 1s on its main diagonal and 0s elsewhere.
///
/// Computed as 0 when A(i,j)=0, else
/// min{1+IM(i+1,j+1), 1+RM(i,j+1), 1+DM(i+1,j)}.
pub fn compute_im_table(g: &BinaryGrid) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let rm = compute_rm_table(g);
    let dm = compute_dm_table(g);
    let mut t = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in (1..=n).rev() {
            let v = if g.at(i, j) == 0 {
                0
            } else {
                (1 + t.get(i + 1, j + 1))
                    .min(1 + rm.get(i, j + 1))
                    .min(1 + dm.get(i + 1, j))
            };
            t.set(i, j, v);
        }
    }
    t
}

/// Runs a generic [`PatternRule`]: computes RM and DM via `f_rm`/`f_dm`,
/// then BEST via `f_best`, scanning rows m→1 and columns n→1.
pub fn run_pattern_engine(g: &BinaryGrid, rule: &PatternRule) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    let mut rm = ValueTable::zeros(m, n);
    let mut dm = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in (1..=n).rev() {
            rm.set(i, j, (rule.f_rm)(g.at(i, j), rm.get(i, j + 1)));
            dm.set(i, j, (rule.f_dm)(g.at(i, j), dm.get(i + 1, j)));
        }
    }
    let mut best = ValueTable::zeros(m, n);
    for i in (1..=m).rev() {
        for j in (1..=n).rev() {
            let inputs = BestInputs {
                cell: g.at(i, j),
                down: g.get(i + 1, j),
                right: g.get(i, j + 1),
                diag: g.get(i + 1, j + 1),
                best_down: best.get(i + 1, j),
                best_right: best.get(i, j + 1),
                best_diag: best.get(i + 1, j + 1),
                rm_here: rm.get(i, j),
                rm_right: rm.get(i, j + 1),
                dm_here: dm.get(i, j),
                dm_down: dm.get(i + 1, j),
            };
            best.set(i, j, (rule.f_best)(&inputs));
        }
    }
    best
}

/// Rule reproducing [`compute_sq_table`] through the generic engine.
pub fn monotone_rule() -> PatternRule {
    PatternRule {
        f_rm: |_, _| 0,
        f_dm: |_, _| 0,
        f_best: |x| {
            let a = Some(x.cell);
            if x.down == a && x.right == a && x.diag == a {
                1 + x.best_down.min(x.best_right).min(x.best_diag)
            } else {
                1
            }
        },
    }
}

/// Rule reproducing [`compute_cb_table`] through the generic engine.
pub fn chessboard_rule() -> PatternRule {
    PatternRule {
        f_rm: |_, _| 0,
        f_dm: |_, _| 0,
        f_best: |x| {
            let a = x.cell;
            let alternates = x.down.map_or(false, |v| v != a)
                && x.right.map_or(false, |v| v != a)
                && x.diag == Some(a);
            if alternates {
                1 + x.best_down.min(x.best_right).min(x.best_diag)
            } else {
                1
            }
        },
    }
}

/// Rule reproducing [`compute_im_table`] through the generic engine.
pub fn identity_rule() -> PatternRule {
    PatternRule {
        f_rm: |cell, rm_right| if cell == 1 { 0 } else { 1 + rm_right },
        f_dm: |cell, dm_down| if cell == 1 { 0 } else { 1 + dm_down },
        f_best: |x| {
            if x.cell == 0 {
                0
            } else {
                (1 + x.best_diag).min(1 + x.rm_right).min(1 + x.dm_down)
            }
        },
    }
}

/// Dedicated table for a pattern.
pub fn compute_pattern_table(g: &BinaryGrid, pattern: SquarePattern) -> ValueTable {
    match pattern {
        SquarePattern::Monotone => compute_sq_table(g),
        SquarePattern::Chessboard => compute_cb_table(g),
        SquarePattern::Identity => compute_im_table(g),
    }
}

/// Extracts the best square from a pattern table. Ties broken by
/// smallest row then smallest column. Returns `None` when the table is
/// all zeros (possible only for the identity pattern).
pub fn best_square(t: &ValueTable, pattern: SquarePattern) -> Option<SquareResult> {
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

/// Checks the pattern predicate cell-by-cell for the square of the
/// given side at `corner`. Out-of-grid squares fail.
pub fn square_matches(g: &BinaryGrid, corner: Cell, side: u32, pattern: SquarePattern) -> bool {
    let side = side as usize;
    if side == 0 {
        return false;
    }
    let (i0, j0) = (corner.row, corner.col);
    if i0 + side - 1 > g.rows() || j0 + side - 1 > g.cols() {
        return false;
    }
    match pattern {
        SquarePattern::Monotone => {
            let a = g.at(i0, j0);
            (0..side).all(|di| (0..side).all(|dj| g.at(i0 + di, j0 + dj) == a))
        }
        SquarePattern::Chessboard => {
            let a = g.at(i0, j0);
            (0..side).all(|di| {
                (0..side).all(|dj| {
                    let expected = if (di + dj) % 2 == 0 { a } else { 1 - a };
                    g.at(i0 + di, j0 + dj) == expected
                })
            })
        }
        SquarePattern::Identity => (0..side).all(|di| {
            (0..side).all(|dj| {
                let expected = if di == dj { 1 } else { 0 };
                g.at(i0 + di, j0 + dj) == expected
            })
        }),
    }
}
