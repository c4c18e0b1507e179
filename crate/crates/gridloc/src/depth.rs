//! Nesting depth of black/white connected components.
//!
//! A 0-1 traversal with a double-ended queue labels every cell with a
//! depth value D: border whites start at 1, border blacks at 2, moving
//! to a same-color neighbor keeps D (push front), crossing colors adds
//! 1 (push back). Black components then have nesting depth D/2.

use std::collections::VecDeque;

use crate::grid::{BinaryGrid, Cell, ValueTable};

/// Grid adjacency: 4-neighbor (axis-aligned) or 8-neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MovementSet {
    Simple,
    Extended,
}

impl MovementSet {
    pub fn offsets(self) -> &'static [(i64, i64)] {
        const SIMPLE: [(i64, i64); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
        const EXTENDED: [(i64, i64); 8] = [
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, -1),
            (0, 1),
            (1, -1),
            (1, 0),
            (1, 1),
        ];
        match self {
            MovementSet::Simple => &SIMPLE,
            MovementSet::Extended => &EXTENDED,
        }
    }
}

/// Which movement set each color uses. The two must differ: one color
/// simple, the other extended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityConvention {
    black_moves: MovementSet,
    white_moves: MovementSet,
}

impl ConnectivityConvention {
    /// Black simple, white extended.
    pub fn standard() -> Self {
        ConnectivityConvention {
            black_moves: MovementSet::Simple,
            white_moves: MovementSet::Extended,
        }
    }

    /// Black extended, white simple.
    pub fn swapped() -> Self {
        ConnectivityConvention {
            black_moves: MovementSet::Extended,
            white_moves: MovementSet::Simple,
        }
    }

    pub fn moves_for(&self, cell_value: u8) -> MovementSet {
        if cell_value == 1 {
            self.black_moves
        } else {
            self.white_moves
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn of(cell_value: u8) -> Color {
        if cell_value == 1 {
            Color::Black
        } else {
            Color::White
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::White => "white",
        }
    }
}

/// One connected component and its depth annotations.
#[derive(Debug, Clone)]
pub struct ComponentInfo {
    pub id: usize,
    pub color: Color,
    pub cells: Vec<Cell>,
    /// Shared D value of the component's cells.
    pub depth_value: u32,
    /// D/2, black components only.
    pub component_depth: Option<u32>,
    /// Black components only: some cell has a neighboring white cell
    /// with D one higher.
    pub encloses_white: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct DepthResult {
    pub depth_table: ValueTable,
    pub components: Vec<ComponentInfo>,
}

fn depth_map_impl(g: &BinaryGrid, conv: ConnectivityConvention, check: bool) -> ValueTable {
    let (m, n) = (g.rows(), g.cols());
    // 0 means undiscovered; real depth values start at 1.
    let mut d = ValueTable::zeros(m, n);
    let mut q: VecDeque<(usize, usize)> = VecDeque::new();

    let border: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| i == 1 || i == m || j == 1 || j == n)
        .collect();
    // Whites (D=1) before blacks (D=2) keeps the deque nondecreasing.
    for &(i, j) in border.iter().filter(|&&(i, j)| g.at(i, j) == 0) {
        d.set(i, j, 1);
        q.push_back((i, j));
    }
    for &(i, j) in border.iter().filter(|&&(i, j)| g.at(i, j) == 1) {
        d.set(i, j, 2);
        q.push_back((i, j));
    }

    while let Some((r, c)) = q.pop_front() {
        let here = g.at(r, c);
        let dv = d.get(r, c);
        for &(dr, dc) in conv.moves_for(here).offsets() {
            let (nr, nc) = (r as i64 + dr, c as i64 + dc);
            if nr < 1 || nc < 1 {
                continue;
            }
            let (nr, nc) = (nr as usize, nc as usize);
            let Some(there) = g.get(nr, nc) else { continue };
            if d.get(nr, nc) != 0 {
                continue;
            }
            if there == here {
                d.set(nr, nc, dv);
                q.push_front((nr, nc));
            } else {
                d.set(nr, nc, dv + 1);
                q.push_back((nr, nc));
            }
        }
        if check {
            let vals: Vec<u32> = q.iter().map(|&(r, c)| d.get(r, c)).collect();
            assert!(vals.windows(2).all(|w| w[0] <= w[1]), "deque not nondecreasing");
            if let (Some(&lo), Some(&hi)) = (vals.first(), vals.last()) {
                assert!(hi - lo <= 1, "deque spans more than two depth values");
            }
        }
    }
    d
}

/// Depth value D for every cell, per the deque traversal.
pub fn compute_depth_map(g: &BinaryGrid, conv: ConnectivityConvention) -> ValueTable {
    depth_map_impl(g, conv, false)
}

/// Same as [`compute_depth_map`] but asserts the deque discipline
/// (nondecreasing, at most two distinct values) at every step.
pub fn compute_depth_map_checked(g: &BinaryGrid, conv: ConnectivityConvention) -> ValueTable {
    depth_map_impl(g, conv, true)
}

/// Flood-fill component labeling, each color using its own movement
/// set. Ids are assigned in raster order of each component's first cell.
pub fn label_components(g: &BinaryGrid, conv: ConnectivityConvention) -> Vec<ComponentInfo> {
    let (m, n) = (g.rows(), g.cols());
    let mut label = vec![usize::MAX; m * n];
    let mut components = Vec::new();
    for si in 1..=m {
        for sj in 1..=n {
            if label[(si - 1) * n + (sj - 1)] != usize::MAX {
                continue;
            }
            let id = components.len();
            let value = g.at(si, sj);
            let moves = conv.moves_for(value);
            let mut cells = Vec::new();
            let mut stack = vec![(si, sj)];
            label[(si - 1) * n + (sj - 1)] = id;
            while let Some((r, c)) = stack.pop() {
                cells.push(Cell::new(r, c));
                for &(dr, dc) in moves.offsets() {
                    let (nr, nc) = (r as i64 + dr, c as i64 + dc);
                    if nr < 1 || nc < 1 {
                        continue;
                    }
                    let (nr, nc) = (nr as usize, nc as usize);
                    if g.get(nr, nc) != Some(value) {
                        continue;
                    }
                    let slot = &mut label[(nr - 1) * n + (nc - 1)];
                    if *slot == usize::MAX {
                        *slot = id;
                        stack.push((nr, nc));
                    }
                }
            }
            cells.sort();
            components.push(ComponentInfo {
                id,
                color: Color::of(value),
                cells,
                depth_value: 0,
                component_depth: None,
                encloses_white: None,
            });
        }
    }
    components
}

/// Full analysis: depth map, components, per-component depth and the
/// encloses-white flag for black components.
pub fn analyze_depth(g: &BinaryGrid, conv: ConnectivityConvention) -> DepthResult {
    let depth_table = compute_depth_map(g, conv);
    let mut components = label_components(g, conv);
    for comp in &mut components {
        let first = comp.cells[0];
        comp.depth_value = depth_table.get(first.row, first.col);
        if comp.color == Color::Black {
            comp.component_depth = Some(comp.depth_value / 2);
            let moves = conv.moves_for(1);
            let encloses = comp.cells.iter().any(|cell| {
                moves.offsets().iter().any(|&(dr, dc)| {
                    let (nr, nc) = (cell.row as i64 + dr, cell.col as i64 + dc);
                    if nr < 1 || nc < 1 {
                        return false;
                    }
                    let (nr, nc) = (nr as usize, nc as usize);
                    g.get(nr, nc) == Some(0)
                        && depth_table.get(nr, nc) == comp.depth_value + 1
                })
            });
            comp.encloses_white = Some(encloses);
        }
    }
    DepthResult {
        depth_table,
        components,
    }
}
