//! Shared grid types, 1-based indexing conventions, and text parsing.
//!
//! All coordinates exposed by this crate (in file formats, JSON output
//! and result types) are 1-based: rows run `1..=m` top to bottom,
//! columns `1..=n` left to right. Table reads outside the grid yield 0.

use std::fmt::Write as _;

use crate::error::Error;

/// A 1-based (row, column) position inside a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An m×n matrix of cells, each 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryGrid {
    m: usize,
    n: usize,
    cells: Vec<u8>,
}

impl BinaryGrid {
    pub fn new(m: usize, n: usize, cells: Vec<u8>) -> Self {
        assert!(m >= 1 && n >= 1, "grid must be at least 1x1");
        assert_eq!(cells.len(), m * n);
        assert!(cells.iter().all(|&c| c <= 1), "cells must be 0 or 1");
        BinaryGrid { m, n, cells }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let m = rows.len();
        let n = rows[0].len();
        let mut cells = Vec::with_capacity(m * n);
        for r in rows {
            assert_eq!(r.len(), n);
            cells.extend_from_slice(r);
        }
        BinaryGrid::new(m, n, cells)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Cell value at 1-based (i, j); panics out of bounds.
    pub fn at(&self, i: usize, j: usize) -> u8 {
        assert!(i >= 1 && i <= self.m && j >= 1 && j <= self.n);
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    /// Cell value at 1-based (i, j), `None` outside the grid.
    /// Accepts i = 0 or j = 0 (also out of grid under 1-based indexing).
    pub fn get(&self, i: usize, j: usize) -> Option<u8> {
        if i >= 1 && i <= self.m && j >= 1 && j <= self.n {
            Some(self.cells[(i - 1) * self.n + (j - 1)])
        } else {
            None
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.m, self.n);
        for i in 1..=self.m {
            for j in 1..=self.n {
                let _ = write!(out, "{}", self.at(i, j));
            }
            out.push('\n');
        }
        out
    }
}

/// An m×n matrix of finite real values.
#[derive(Debug, Clone, PartialEq)]
pub struct RealGrid {
    m: usize,
    n: usize,
    cells: Vec<f64>,
}

impl RealGrid {
    pub fn new(m: usize, n: usize, cells: Vec<f64>) -> Self {
        assert!(m >= 1 && n >= 1);
        assert_eq!(cells.len(), m * n);
        assert!(cells.iter().all(|c| c.is_finite()));
        RealGrid { m, n, cells }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && i <= self.m && j >= 1 && j <= self.n);
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.m, self.n);
        for i in 1..=self.m {
            for j in 1..=self.n {
                if j > 1 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", self.at(i, j));
            }
            out.push('\n');
        }
        out
    }
}

/// An m×n table of nonnegative integers holding a DP result.
///
/// Reads at out-of-grid positions (row 0, m+1, column 0, n+1, ...)
/// return 0, which collapses all the recurrence boundary cases into
/// one rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueTable {
    m: usize,
    n: usize,
    values: Vec<u32>,
}

impl ValueTable {
    pub fn zeros(m: usize, n: usize) -> Self {
        ValueTable {
            m,
            n,
            values: vec![0; m * n],
        }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Value at 1-based (i, j); 0 anywhere outside the grid.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i >= 1 && i <= self.m && j >= 1 && j <= self.n {
            self.values[(i - 1) * self.n + (j - 1)]
        } else {
            0
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        assert!(i >= 1 && i <= self.m && j >= 1 && j <= self.n);
        self.values[(i - 1) * self.n + (j - 1)] = v;
    }

    /// Maximum value and the cell holding it, ties broken by smallest
    /// row then smallest column.
    pub fn max_cell(&self) -> (Cell, u32) {
        let mut best = (Cell::new(1, 1), self.get(1, 1));
        for i in 1..=self.m {
            for j in 1..=self.n {
                let v = self.get(i, j);
                if v > best.1 {
                    best = (Cell::new(i, j), v);
                }
            }
        }
        best
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (1..=self.m)
            .map(|i| (1..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// A set of planar points inside the bounding rectangle
/// `[0, xmax] × [0, ymax]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    pub xmax: f64,
    pub ymax: f64,
    pub points: Vec<(f64, f64)>,
}

impl PointSet {
    pub fn new(xmax: f64, ymax: f64, points: Vec<(f64, f64)>) -> Self {
        assert!(xmax >= 0.0 && ymax >= 0.0);
        for &(x, y) in &points {
            assert!(x >= 0.0 && x <= xmax && y >= 0.0 && y <= ymax);
        }
        PointSet { xmax, ymax, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {}\n", self.points.len(), self.xmax, self.ymax);
        for &(x, y) in &self.points {
            let _ = writeln!(out, "{} {}", x, y);
        }
        out
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn header_tokens(text: &str) -> Result<(Vec<&str>, Vec<&str>), Error> {
    let mut lines = text.lines();
    let first = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let header: Vec<&str> = first.split_whitespace().collect();
    let rest: Vec<&str> = lines.collect();
    Ok((header, rest))
}

/// Parses a binary grid: a `"m n"` header, then m rows of n cells.
/// Rows may be contiguous digits (`101`) or whitespace-separated.
pub fn parse_binary_grid(text: &str) -> Result<BinaryGrid, Error> {
    let (header, data) = header_tokens(text)?;
    if header.len() != 2 {
        return Err(parse_err(1, "expected header \"m n\""));
    }
    let m: usize = header[0]
        .parse()
        .map_err(|_| parse_err(1, format!("bad row count {:?}", header[0])))?;
    let n: usize = header[1]
        .parse()
        .map_err(|_| parse_err(1, format!("bad column count {:?}", header[1])))?;
    if m == 0 || n == 0 {
        return Err(parse_err(1, "dimensions must be at least 1"));
    }

    let mut cells = Vec::with_capacity(m * n);
    let mut row = 0;
    for (idx, line) in data.iter().enumerate() {
        let lineno = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        if row == m {
            return Err(parse_err(lineno, format!("expected {} data rows, found more", m)));
        }
        row += 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let digits: Vec<u8> = if tokens.len() == 1 && tokens[0].len() > 1 {
            // Contiguous form "101".
            tokens[0]
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(parse_err(lineno, format!("illegal character {:?}", other))),
                })
                .collect::<Result<_, _>>()?
        } else {
            tokens
                .iter()
                .map(|t| match *t {
                    "0" => Ok(0),
                    "1" => Ok(1),
                    other => Err(parse_err(lineno, format!("illegal token {:?}", other))),
                })
                .collect::<Result<_, _>>()?
        };
        if digits.len() != n {
            return Err(parse_err(
                lineno,
                format!("row {} has {} cells, expected {}", row, digits.len(), n),
            ));
        }
        cells.extend(digits);
    }
    if row != m {
        return Err(parse_err(
            data.len() + 1,
            format!("expected {} data rows, found {}", m, row),
        ));
    }
    Ok(BinaryGrid::new(m, n, cells))
}

/// Parses a real-valued grid: a `"m n"` header, then m rows of n numbers.
pub fn parse_real_grid(text: &str) -> Result<RealGrid, Error> {
    let (header, data) = header_tokens(text)?;
    if header.len() != 2 {
        return Err(parse_err(1, "expected header \"m n\""));
    }
    let m: usize = header[0]
        .parse()
        .map_err(|_| parse_err(1, format!("bad row count {:?}", header[0])))?;
    let n: usize = header[1]
        .parse()
        .map_err(|_| parse_err(1, format!("bad column count {:?}", header[1])))?;
    if m == 0 || n == 0 {
        return Err(parse_err(1, "dimensions must be at least 1"));
    }

    let mut cells = Vec::with_capacity(m * n);
    let mut row = 0;
    for (idx, line) in data.iter().enumerate() {
        let lineno = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        if row == m {
            return Err(parse_err(lineno, format!("expected {} data rows, found more", m)));
        }
        row += 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != n {
            return Err(parse_err(
                lineno,
                format!("row {} has {} values, expected {}", row, tokens.len(), n),
            ));
        }
        for t in tokens {
            let v: f64 = t
                .parse()
                .map_err(|_| parse_err(lineno, format!("non-numeric token {:?}", t)))?;
            if !v.is_finite() {
                return Err(parse_err(lineno, format!("non-finite value {:?}", t)));
            }
            cells.push(v);
        }
    }
    if row != m {
        return Err(parse_err(
            data.len() + 1,
            format!("expected {} data rows, found {}", m, row),
        ));
    }
    Ok(RealGrid::new(m, n, cells))
}

/// Parses a point set: a `"n Xmax Ymax"` header, then n lines `"x y"`.
pub fn parse_points(text: &str) -> Result<PointSet, Error> {
    let (header, data) = header_tokens(text)?;
    if header.len() != 3 {
        return Err(parse_err(1, "expected header \"n Xmax Ymax\""));
    }
    let n: usize = header[0]
        .parse()
        .map_err(|_| parse_err(1, format!("bad point count {:?}", header[0])))?;
    let xmax: f64 = header[1]
        .parse()
        .map_err(|_| parse_err(1, format!("bad Xmax {:?}", header[1])))?;
    let ymax: f64 = header[2]
        .parse()
        .map_err(|_| parse_err(1, format!("bad Ymax {:?}", header[2])))?;
    if !xmax.is_finite() || !ymax.is_finite() || xmax < 0.0 || ymax < 0.0 {
        return Err(parse_err(1, "Xmax and Ymax must be nonnegative finite"));
    }

    let mut points = Vec::with_capacity(n);
    for (idx, line) in data.iter().enumerate() {
        let lineno = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        if points.len() == n {
            return Err(parse_err(lineno, format!("expected {} points, found more", n)));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(lineno, "expected \"x y\""));
        }
        let x: f64 = tokens[0]
            .parse()
            .map_err(|_| parse_err(lineno, format!("non-numeric x {:?}", tokens[0])))?;
        let y: f64 = tokens[1]
            .parse()
            .map_err(|_| parse_err(lineno, format!("non-numeric y {:?}", tokens[1])))?;
        if !x.is_finite() || !y.is_finite() {
            return Err(parse_err(lineno, "non-finite coordinate"));
        }
        if x < 0.0 || x > xmax {
            return Err(parse_err(lineno, format!("x={} outside [0,{}]", x, xmax)));
        }
        if y < 0.0 || y > ymax {
            return Err(parse_err(lineno, format!("y={} outside [0,{}]", y, ymax)));
        }
        points.push((x, y));
    }
    if points.len() != n {
        return Err(parse_err(
            data.len() + 1,
            format!("expected {} points, found {}", n, points.len()),
        ));
    }
    Ok(PointSet::new(xmax, ymax, points))
}
