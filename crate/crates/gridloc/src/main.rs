use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gridloc::bench::{run_bench, BenchAlgo};
use gridloc::depth::{analyze_depth, Color, ConnectivityConvention, DepthResult};
use gridloc::diamonds::{
    best_diamond, compute_diamond_center_table, compute_diamond_top_table, compute_triangle_table,
    Direction,
};
use gridloc::empty_rect::{max_empty_rectangle, rect_is_empty};
use gridloc::grid::{parse_binary_grid, parse_points, parse_real_grid, ValueTable};
use gridloc::oracle;
use gridloc::perimeter::{boundary_sum, max_perimeter_rectangle};
use gridloc::squares::{best_square, compute_pattern_table, SquarePattern};

/// Environment variable that makes `check` perturb the fast answer
/// before comparing, to verify that mismatches exit with code 2.
const FAULT_ENV: &str = "GRIDLOC_INJECT_FAULT";

const REL_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "gridloc", version, about = "Locate optimally-shaped facilities on grid maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Input file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also dump the full DP table.
    #[arg(long)]
    table: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    Monotone,
    Chessboard,
    Identity,
}

impl From<PatternArg> for SquarePattern {
    fn from(p: PatternArg) -> Self {
        match p {
            PatternArg::Monotone => SquarePattern::Monotone,
            PatternArg::Chessboard => SquarePattern::Chessboard,
            PatternArg::Identity => SquarePattern::Identity,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Nw,
    Ne,
    Sw,
    Se,
}

impl From<DirArg> for Direction {
    fn from(d: DirArg) -> Self {
        match d {
            DirArg::Nw => Direction::Nw,
            DirArg::Ne => Direction::Ne,
            DirArg::Sw => Direction::Sw,
            DirArg::Se => Direction::Se,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Largest patterned square.
    Square {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[command(flatten)]
        common: Common,
    },
    /// Largest all-ones diamond.
    Diamond {
        #[command(flatten)]
        common: Common,
    },
    /// Per-cell largest triangle table for one orientation.
    Triangle {
        #[arg(long, value_enum)]
        dir: DirArg,
        #[command(flatten)]
        common: Common,
    },
    /// Largest empty rectangle among points.
    EmptyRect {
        #[command(flatten)]
        common: Common,
    },
    /// Maximum perimeter-sum subrectangle.
    Perimeter {
        #[command(flatten)]
        common: Common,
    },
    /// Component nesting depth.
    Depth {
        /// Use extended moves for black, simple for white.
        #[arg(long)]
        swap_connectivity: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the brute-force reference implementation instead of the
    /// fast algorithm.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run both the fast algorithm and the oracle and compare; exits
    /// with code 2 on a mismatch.
    Check {
        #[command(subcommand)]
        command: CheckCommand,
    },
    /// Time an algorithm on a seeded random input.
    Bench {
        #[command(subcommand)]
        command: BenchCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    Square {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[command(flatten)]
        common: Common,
    },
    Diamond {
        #[command(flatten)]
        common: Common,
    },
    Triangle {
        #[arg(long, value_enum)]
        dir: DirArg,
        #[command(flatten)]
        common: Common,
    },
    EmptyRect {
        #[command(flatten)]
        common: Common,
    },
    Perimeter {
        #[command(flatten)]
        common: Common,
    },
    Depth {
        #[arg(long)]
        swap_connectivity: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    Square {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[command(flatten)]
        common: Common,
    },
    Diamond {
        #[command(flatten)]
        common: Common,
    },
    Triangle {
        #[arg(long, value_enum)]
        dir: DirArg,
        #[command(flatten)]
        common: Common,
    },
    EmptyRect {
        #[command(flatten)]
        common: Common,
    },
    Perimeter {
        #[command(flatten)]
        common: Common,
    },
    Depth {
        #[arg(long)]
        swap_connectivity: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    Square(BenchArgs),
    Diamond(BenchArgs),
    Depth(BenchArgs),
    EmptyRect(BenchArgs),
    Perimeter(BenchArgs),
}

#[derive(Args)]
struct BenchArgs {
    /// Grid side length (or point count for empty-rect).
    #[arg(long)]
    size: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {}", p.display(), e)),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {}", e))?;
            Ok(buf)
        }
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(1)
}

fn table_json(t: &ValueTable) -> serde_json::Value {
    json!(t.to_rows())
}

fn print_table_text(t: &ValueTable) {
    for row in t.to_rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("{}", line.join(" "));
    }
}

fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

fn fault_injection_active() -> bool {
    std::env::var(FAULT_ENV).map_or(false, |v| !v.is_empty())
}

fn run_square(pattern: SquarePattern, common: &Common, use_oracle: bool) -> Result<(), String> {
    let g = parse_binary_grid(&read_input(&common.input)?).map_err(|e| e.to_string())?;
    let (t, best) = if use_oracle {
        let t = oracle::oracle_square_table(&g, pattern);
        let b = oracle::oracle_best_square(&g, pattern);
        (t, b)
    } else {
        let t = compute_pattern_table(&g, pattern);
        let b = best_square(&t, pattern);
        (t, b)
    };
    match common.format {
        Format::Json => {
            let mut out = match best {
                Some(r) => json!({
                    "pattern": pattern.name(),
                    "found": true,
                    "corner": {"row": r.corner.row, "col": r.corner.col},
                    "side": r.side,
                }),
                None => json!({"pattern": pattern.name(), "found": false}),
            };
            if common.table {
                out["table"] = table_json(&t);
            }
            println!("{}", out);
        }
        Format::Text => {
            match best {
                Some(r) => println!("side={} corner={}", r.side, r.corner),
                None => println!("no such square"),
            }
            if common.table {
                print_table_text(&t);
            }
        }
    }
    Ok(())
}

fn run_diamond(common: &Common, use_oracle: bool) -> Result<(), String> {
    let g = parse_binary_grid(&read_input(&common.input)?).map_err(|e| e.to_string())?;
    let (t, best) = if use_oracle {
        (oracle::oracle_diamond_top_table(&g), oracle::oracle_best_diamond(&g))
    } else {
        (compute_diamond_top_table(&g), best_diamond(&g))
    };
    match common.format {
        Format::Json => {
            let mut out = match best {
                Some(r) => json!({
                    "found": true,
                    "top_cell": {"row": r.top_cell.row, "col": r.top_cell.col},
                    "center": {"row": r.center.row, "col": r.center.col},
                    "side": r.side,
                }),
                None => json!({"found": false}),
            };
            if common.table {
                out["table"] = table_json(&t);
            }
            println!("{}", out);
        }
        Format::Text => {
            match best {
                Some(r) => println!("side={} top={} center={}", r.side, r.top_cell, r.center),
                None => println!("no diamond found"),
            }
            if common.table {
                print_table_text(&t);
            }
        }
    }
    Ok(())
}

fn run_triangle(dir: Direction, common: &Common, use_oracle: bool) -> Result<(), String> {
    let g = parse_binary_grid(&read_input(&common.input)?).map_err(|e| e.to_string())?;
    let t = if use_oracle {
        oracle::oracle_triangle_table(&g, dir)
    } else {
        compute_triangle_table(&g, dir)
    };
    let (cell, max) = t.max_cell();
    match common.format {
        Format::Json => {
            let mut out = json!({
                "dir": dir.name(),
                "max": max,
                "cell": {"row": cell.row, "col": cell.col},
            });
            if common.table {
                out["table"] = table_json(&t);
            }
            println!("{}", out);
        }
        Format::Text => {
            println!("max={} cell={}", max, cell);
            if common.table {
                print_table_text(&t);
            }
        }
    }
    Ok(())
}

fn run_empty_rect(common: &Common, use_oracle: bool) -> Result<(), String> {
    let ps = parse_points(&read_input(&common.input)?).map_err(|e| e.to_string())?;
    let r = if use_oracle {
        oracle::oracle_empty_rectangle(&ps)
    } else {
        max_empty_rectangle(&ps)
    };
    match common.format {
        Format::Json => println!("{}", serde_json::to_string(&r).unwrap()),
        Format::Text => {
            if r.degenerate {
                println!("area=0 (degenerate)");
            } else {
                println!("area={} x1={} y1={} x2={} y2={}", r.area, r.x1, r.y1, r.x2, r.y2);
            }
        }
    }
    Ok(())
}

fn run_perimeter(common: &Common, use_oracle: bool) -> Result<(), String> {
    let b = parse_real_grid(&read_input(&common.input)?).map_err(|e| e.to_string())?;
    let r = if use_oracle {
        oracle::oracle_perimeter(&b).ok_or("no valid rectangle: matrix must have at least 2 rows and 2 columns")?
    } else {
        max_perimeter_rectangle(&b).map_err(|e| e.to_string())?
    };
    match common.format {
        Format::Json => println!("{}", serde_json::to_string(&r).unwrap()),
        Format::Text => println!(
            "value={} rows={}..{} cols={}..{}",
            r.value, r.l1, r.l2, r.c1, r.c2
        ),
    }
    Ok(())
}

fn depth_json(res: &DepthResult, with_table: bool) -> serde_json::Value {
    let components: Vec<serde_json::Value> = res
        .components
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "color": c.color.name(),
                "cells": c.cells.len(),
                "depth_value": c.depth_value,
                "depth": c.component_depth,
                "encloses_white": c.encloses_white,
            })
        })
        .collect();
    let mut out = json!({"components": components});
    if with_table {
        out["table"] = table_json(&res.depth_table);
    }
    out
}

fn run_depth(swap: bool, common: &Common, use_oracle: bool) -> Result<(), String> {
    let g = parse_binary_grid(&read_input(&common.input)?).map_err(|e| e.to_string())?;
    let conv = if swap {
        ConnectivityConvention::swapped()
    } else {
        ConnectivityConvention::standard()
    };
    if use_oracle {
        let t = oracle::oracle_depth(&g, conv);
        match common.format {
            Format::Json => {
                let out = json!({"table": table_json(&t)});
                println!("{}", out);
            }
            Format::Text => print_table_text(&t),
        }
        return Ok(());
    }
    let res = analyze_depth(&g, conv);
    match common.format {
        Format::Json => println!("{}", depth_json(&res, common.table)),
        Format::Text => {
            for c in &res.components {
                match c.color {
                    Color::Black => println!(
                        "component {}: black cells={} depth={} encloses_white={}",
                        c.id,
                        c.cells.len(),
                        c.component_depth.unwrap(),
                        c.encloses_white.unwrap()
                    ),
                    Color::White => println!(
                        "component {}: white cells={} depth_value={}",
                        c.id,
                        c.cells.len(),
                        c.depth_value
                    ),
                }
            }
            if common.table {
                print_table_text(&res.depth_table);
            }
        }
    }
    Ok(())
}

/// Outcome of a differential check: Ok(true) match, Ok(false) mismatch.
type CheckOutcome = Result<bool, String>;

fn check_square(pattern: SquarePattern, common: &Common) -> CheckOutcome {
    let input = read_input(&common.input)?;
    let g = parse_binary_grid(&input).map_err(|e| e.to_string())?;
    let mut fast = best_square(&compute_pattern_table(&g, pattern), pattern);
    if fault_injection_active() {
        if let Some(r) = &mut fast {
            r.side += 1;
        }
    }
    let slow = oracle::oracle_best_square(&g, pattern);
    if fast == slow {
        println!("check square --pattern {}: OK ({:?})", pattern.name(), fast);
        Ok(true)
    } else {
        println!("check square --pattern {}: MISMATCH", pattern.name());
        println!("fast:   {:?}", fast);
        println!("oracle: {:?}", slow);
        println!("input:\n{}", input);
        Ok(false)
    }
}

fn check_diamond(common: &Common) -> CheckOutcome {
    let input = read_input(&common.input)?;
    let g = parse_binary_grid(&input).map_err(|e| e.to_string())?;
    let mut fast_top = compute_diamond_top_table(&g);
    if fault_injection_active() {
        let v = fast_top.get(1, 1);
        fast_top.set(1, 1, v + 1);
    }
    let slow_top = oracle::oracle_diamond_top_table(&g);
    let fast_center = compute_diamond_center_table(&g);
    let slow_center = oracle::oracle_diamond_center_table(&g);
    if fast_top == slow_top && fast_center == slow_center {
        println!("check diamond: OK (max side {})", slow_top.max_cell().1);
        Ok(true)
    } else {
        println!("check diamond: MISMATCH");
        println!("fast top table:   {:?}", fast_top.to_rows());
        println!("oracle top table: {:?}", slow_top.to_rows());
        println!("fast center table:   {:?}", fast_center.to_rows());
        println!("oracle center table: {:?}", slow_center.to_rows());
        println!("input:\n{}", input);
        Ok(false)
    }
}

fn check_triangle(dir: Direction, common: &Common) -> CheckOutcome {
    let input = read_input(&common.input)?;
    let g = parse_binary_grid(&input).map_err(|e| e.to_string())?;
    let mut fast = compute_triangle_table(&g, dir);
    if fault_injection_active() {
        let v = fast.get(1, 1);
        fast.set(1, 1, v + 1);
    }
    let slow = oracle::oracle_triangle_table(&g, dir);
    if fast == slow {
        println!("check triangle --dir {}: OK", dir.name());
        Ok(true)
    } else {
        println!("check triangle --dir {}: MISMATCH", dir.name());
        println!("fast:   {:?}", fast.to_rows());
        println!("oracle: {:?}", slow.to_rows());
        println!("input:\n{}", input);
        Ok(false)
    }
}

fn check_empty_rect(common: &Common) -> CheckOutcome {
    let input = read_input(&common.input)?;
    let ps = parse_points(&input).map_err(|e| e.to_string())?;
    let mut fast = max_empty_rectangle(&ps);
    if fault_injection_active() {
        fast.area += 1.0;
    }
    let slow = oracle::oracle_empty_rectangle(&ps);
    let witness_ok = fast.degenerate || rect_is_empty(&ps, fast.x1, fast.y1, fast.x2, fast.y2);
    if approx_eq(fast.area, slow.area) && witness_ok {
        println!("check empty-rect: OK (area {})", fast.area);
        Ok(true)
    } else {
        println!("check empty-rect: MISMATCH");
        println!("fast:   {:?}", fast);
        println!("oracle: {:?}", slow);
        println!("input:\n{}", input);
        Ok(false)
    }
}

fn check_perimeter(common: &Common) -> CheckOutcome {
    let input = read_input(&common.input)?;
    let b = parse_real_grid(&input).map_err(|e| e.to_string())?;
    let mut fast = max_perimeter_rectangle(&b).map_err(|e| e.to_string())?;
    if fault_injection_active() {
        fast.value += 1.0;
    }
    let slow = oracle::oracle_perimeter(&b).expect("oracle rejects only <2x2 inputs");
    let witness = boundary_sum(&b, fast.l1, fast.l2, fast.c1, fast.c2);
    if approx_eq(fast.value, slow.value) && approx_eq(fast.value, witness) {
        println!("check perimeter: OK (value {})", fast.value);
        Ok(true)
    } else {
        println!("check perimeter: MISMATCH");
        println!("fast:   {:?}", fast);
        println!("oracle: {:?}", slow);
        println!("input:\n{}", input);
        Ok(false)
    }
}

fn check_depth(swap: bool, common: &Common) -> CheckOutcome {
    let input = read_input(&common.input)?;
    let g = parse_binary_grid(&input).map_err(|e| e.to_string())?;
    let conv = if swap {
        ConnectivityConvention::swapped()
    } else {
        ConnectivityConvention::standard()
    };
    let mut fast = gridloc::depth::compute_depth_map(&g, conv);
    if fault_injection_active() {
        let v = fast.get(1, 1);
        fast.set(1, 1, v + 1);
    }
    let slow = oracle::oracle_depth(&g, conv);
    if fast == slow {
        println!("check depth{}: OK", if swap { " --swap-connectivity" } else { "" });
        Ok(true)
    } else {
        println!("check depth: MISMATCH");
        println!("fast:   {:?}", fast.to_rows());
        println!("oracle: {:?}", slow.to_rows());
        println!("input:\n{}", input);
        Ok(false)
    }
}

fn run_bench_command(algo: BenchAlgo, args: &BenchArgs) {
    let report = run_bench(algo, args.size, args.seed);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
        Format::Text => println!(
            "algo={:?} size={} seed={} seconds={:.6}",
            report.algo, report.size, report.seed, report.seconds
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(), String> = match &cli.command {
        Command::Square { pattern, common } => run_square((*pattern).into(), common, false),
        Command::Diamond { common } => run_diamond(common, false),
        Command::Triangle { dir, common } => run_triangle((*dir).into(), common, false),
        Command::EmptyRect { common } => run_empty_rect(common, false),
        Command::Perimeter { common } => run_perimeter(common, false),
        Command::Depth {
            swap_connectivity,
            common,
        } => run_depth(*swap_connectivity, common, false),
        Command::Oracle { command } => match command {
            OracleCommand::Square { pattern, common } => run_square((*pattern).into(), common, true),
            OracleCommand::Diamond { common } => run_diamond(common, true),
            OracleCommand::Triangle { dir, common } => run_triangle((*dir).into(), common, true),
            OracleCommand::EmptyRect { common } => run_empty_rect(common, true),
            OracleCommand::Perimeter { common } => run_perimeter(common, true),
            OracleCommand::Depth {
                swap_connectivity,
                common,
            } => run_depth(*swap_connectivity, common, true),
        },
        Command::Check { command } => {
            let outcome = match command {
                CheckCommand::Square { pattern, common } => check_square((*pattern).into(), common),
                CheckCommand::Diamond { common } => check_diamond(common),
                CheckCommand::Triangle { dir, common } => check_triangle((*dir).into(), common),
                CheckCommand::EmptyRect { common } => check_empty_rect(common),
                CheckCommand::Perimeter { common } => check_perimeter(common),
                CheckCommand::Depth {
                    swap_connectivity,
                    common,
                } => check_depth(*swap_connectivity, common),
            };
            return match outcome {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(2),
                Err(e) => fail(e),
            };
        }
        Command::Bench { command } => {
            match command {
                BenchCommand::Square(a) => run_bench_command(BenchAlgo::Square, a),
                BenchCommand::Diamond(a) => run_bench_command(BenchAlgo::Diamond, a),
                BenchCommand::Depth(a) => run_bench_command(BenchAlgo::Depth, a),
                BenchCommand::EmptyRect(a) => run_bench_command(BenchAlgo::EmptyRect, a),
                BenchCommand::Perimeter(a) => run_bench_command(BenchAlgo::Perimeter, a),
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}
