//! Acceptance suite: one test per criterion, each printing a PASS line
//! when it completes. Run with `cargo test --test acceptance`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gridloc::bench::{run_bench, BenchAlgo};
use gridloc::depth::{
    analyze_depth, compute_depth_map, compute_depth_map_checked, ConnectivityConvention,
};
use gridloc::diamonds::{
    best_diamond, compute_diamond_center_table, compute_diamond_top_table, compute_triangle_table,
    diamond_matches, Direction,
};
use gridloc::empty_rect::{compress, max_empty_rectangle, rect_is_empty};
use gridloc::grid::{BinaryGrid, PointSet, RealGrid};
use gridloc::oracle::{
    oracle_depth, oracle_diamond_center_table, oracle_diamond_top_table, oracle_empty_rectangle,
    oracle_perimeter, oracle_square_table, oracle_triangle_table,
};
use gridloc::perimeter::{boundary_sum, max_perimeter_rectangle};
use gridloc::squares::{
    best_square, compute_im_table, compute_pattern_table,
    square_matches, SquarePattern,
};

const REL_TOL: f64 = 1e-9;

fn approx(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

/// All 2^(m*n) binary grids of one shape.
fn all_grids(m: usize, n: usize) -> impl Iterator<Item = BinaryGrid> {
    let bits = m * n;
    (0u32..(1 << bits)).map(move |mask| {
        let cells: Vec<u8> = (0..bits).map(|b| ((mask >> b) & 1) as u8).collect();
        BinaryGrid::new(m, n, cells)
    })
}

fn random_grid(rng: &mut ChaCha8Rng, max_side: usize) -> BinaryGrid {
    let m = rng.gen_range(1..=max_side);
    let n = rng.gen_range(1..=max_side);
    let cells: Vec<u8> = (0..m * n).map(|_| rng.gen_range(0..=1)).collect();
    BinaryGrid::new(m, n, cells)
}

fn check_grid_everything(g: &BinaryGrid) {
    for pattern in [
        SquarePattern::Monotone,
        SquarePattern::Chessboard,
        SquarePattern::Identity,
    ] {
        assert_eq!(
            compute_pattern_table(g, pattern),
            oracle_square_table(g, pattern),
            "square {:?} mismatch on {:?}",
            pattern,
            g
        );
    }
    for dir in Direction::ALL {
        assert_eq!(
            compute_triangle_table(g, dir),
            oracle_triangle_table(g, dir),
            "triangle {:?} mismatch on {:?}",
            dir,
            g
        );
    }
    assert_eq!(
        compute_diamond_center_table(g),
        oracle_diamond_center_table(g),
        "diamond center mismatch on {:?}",
        g
    );
    assert_eq!(
        compute_diamond_top_table(g),
        oracle_diamond_top_table(g),
        "diamond top mismatch on {:?}",
        g
    );
    for conv in [
        ConnectivityConvention::standard(),
        ConnectivityConvention::swapped(),
    ] {
        assert_eq!(
            compute_depth_map(g, conv),
            oracle_depth(g, conv),
            "depth mismatch on {:?}",
            g
        );
    }
}

#[test]
fn exhaustive_oracle_equivalence_up_to_4x4() {
    for m in 1..=4 {
        for n in 1..=4 {
            for g in all_grids(m, n) {
                check_grid_everything(&g);
            }
        }
    }
    println!("ACCEPTANCE PASS: exhaustive fast==oracle on all grids up to 4x4");
}

#[test]
fn randomized_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for _ in 0..200 {
        let g = random_grid(&mut rng, 12);
        check_grid_everything(&g);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    for _ in 0..200 {
        let m = rng.gen_range(2..=10);
        let n = rng.gen_range(2..=10);
        let cells: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let b = RealGrid::new(m, n, cells);
        let fast = max_perimeter_rectangle(&b).unwrap();
        let slow = oracle_perimeter(&b).unwrap();
        assert!(approx(fast.value, slow.value), "{:?} vs {:?}", fast, slow);
        assert_eq!(
            (fast.l1, fast.l2, fast.c1, fast.c2),
            (slow.l1, slow.l2, slow.c1, slow.c2),
            "tie rule disagreement"
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for _ in 0..100 {
        let n = rng.gen_range(0..=8);
        let (xmax, ymax) = (rng.gen_range(1.0..20.0), rng.gen_range(1.0..20.0));
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(0.0..=xmax), rng.gen_range(0.0..=ymax)))
            .collect();
        let ps = PointSet::new(xmax, ymax, points);
        let fast = max_empty_rectangle(&ps);
        let slow = oracle_empty_rectangle(&ps);
        assert!(approx(fast.area, slow.area), "{:?} vs {:?}", fast, slow);
    }
    println!("ACCEPTANCE PASS: randomized fast==oracle (grids, perimeter, empty-rect)");
}

#[test]
fn printed_recurrence_divergence_fixtures() {
    // Identity square on the 2x2 identity grid: the correct side is 2.
    let g = BinaryGrid::from_rows(&[&[1, 0], &[0, 1]]);
    let im = compute_im_table(&g);
    assert_eq!(im.get(1, 1), 2);
    assert_eq!(im, oracle_square_table(&g, SquarePattern::Identity));

    // SE triangle on [[1,1],[1,0]]: the correct side is 2.
    let g = BinaryGrid::from_rows(&[&[1, 1], &[1, 0]]);
    let tse = compute_triangle_table(&g, Direction::Se);
    assert_eq!(tse.get(1, 1), 2);
    assert_eq!(tse, oracle_triangle_table(&g, Direction::Se));

    println!("ACCEPTANCE PASS: divergence fixtures (IM(1,1)=2, TSE(1,1)=2) match the definition oracle");
}

#[test]
fn invariant_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(2001);

    // Depth: parity, component constancy, deque discipline.
    for _ in 0..100 {
        let g = random_grid(&mut rng, 10);
        for conv in [
            ConnectivityConvention::standard(),
            ConnectivityConvention::swapped(),
        ] {
            let checked = compute_depth_map_checked(&g, conv);
            let res = analyze_depth(&g, conv);
            assert_eq!(checked, res.depth_table);
            for i in 1..=g.rows() {
                for j in 1..=g.cols() {
                    assert_eq!(res.depth_table.get(i, j) % 2, 1 - g.at(i, j) as u32);
                }
            }
            for comp in &res.components {
                assert!(comp
                    .cells
                    .iter()
                    .all(|c| res.depth_table.get(c.row, c.col) == comp.depth_value));
            }
        }
    }

    // Diamonds: decomposition identity and reflection symmetry.
    for _ in 0..100 {
        let g = random_grid(&mut rng, 10);
        assert_eq!(compute_diamond_center_table(&g), oracle_diamond_center_table(&g));
        let (m, n) = (g.rows(), g.cols());
        let flipped = BinaryGrid::new(
            m,
            n,
            (1..=m)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .map(|(i, j)| g.at(m + 1 - i, n + 1 - j))
                .collect(),
        );
        let nw = compute_triangle_table(&g, Direction::Nw);
        let se = compute_triangle_table(&flipped, Direction::Se);
        let ne = compute_triangle_table(&g, Direction::Ne);
        let sw = compute_triangle_table(&flipped, Direction::Sw);
        for i in 1..=m {
            for j in 1..=n {
                assert_eq!(nw.get(i, j), se.get(m + 1 - i, n + 1 - j));
                assert_eq!(ne.get(i, j), sw.get(m + 1 - i, n + 1 - j));
            }
        }
    }

    // Witness validity for every reported square, diamond, rectangle.
    for _ in 0..100 {
        let g = random_grid(&mut rng, 10);
        for pattern in [
            SquarePattern::Monotone,
            SquarePattern::Chessboard,
            SquarePattern::Identity,
        ] {
            if let Some(r) = best_square(&compute_pattern_table(&g, pattern), pattern) {
                assert!(square_matches(&g, r.corner, r.side, pattern));
                assert!(!square_matches(&g, r.corner, r.side + 1, pattern));
            }
        }
        if let Some(r) = best_diamond(&g) {
            assert!(diamond_matches(&g, r.center, r.side));
            let bigger_center =
                gridloc::grid::Cell::new(r.top_cell.row + r.side as usize, r.top_cell.col);
            assert!(!diamond_matches(&g, bigger_center, r.side + 1));
        }
    }
    for _ in 0..50 {
        let m = rng.gen_range(2..=10);
        let n = rng.gen_range(2..=10);
        let cells: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let b = RealGrid::new(m, n, cells);
        let r = max_perimeter_rectangle(&b).unwrap();
        assert!(approx(r.value, boundary_sum(&b, r.l1, r.l2, r.c1, r.c2)));
    }
    for _ in 0..50 {
        let n = rng.gen_range(0..=8);
        let (xmax, ymax) = (rng.gen_range(1.0..20.0), rng.gen_range(1.0..20.0));
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(0.0..=xmax), rng.gen_range(0.0..=ymax)))
            .collect();
        let ps = PointSet::new(xmax, ymax, points);
        let r = max_empty_rectangle(&ps);
        if !r.degenerate {
            assert!(rect_is_empty(&ps, r.x1, r.y1, r.x2, r.y2));
            assert!(r.x1 >= 0.0 && r.x2 <= xmax + 1e-12 && r.y1 >= 0.0 && r.y2 <= ymax + 1e-12);
            assert!(approx(r.area, (r.x2 - r.x1) * (r.y2 - r.y1)));
        }

        // Conservation of compressed widths and heights.
        let cg = compress(&ps);
        let wsum: f64 = cg.col_widths.iter().sum();
        let hsum: f64 = cg.row_heights.iter().sum();
        assert!(approx(wsum, xmax));
        assert!(approx(hsum, ymax));
        assert!(cg.col_widths.iter().skip(1).step_by(2).all(|&w| w == 0.0));
        assert!(cg.row_heights.iter().skip(1).step_by(2).all(|&h| h == 0.0));
    }

    // Perimeter: positive-scaling equivariance.
    for _ in 0..50 {
        let m = rng.gen_range(2..=8);
        let n = rng.gen_range(2..=8);
        let cells: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let c = rng.gen_range(0.1..5.0);
        let b = RealGrid::new(m, n, cells.clone());
        let scaled = RealGrid::new(m, n, cells.iter().map(|v| v * c).collect());
        let r = max_perimeter_rectangle(&b).unwrap();
        let opt_scaled = oracle_perimeter(&scaled).unwrap();
        assert!(approx(opt_scaled.value, c * r.value));
        // The unscaled winner stays optimal after scaling.
        assert!(approx(
            boundary_sum(&scaled, r.l1, r.l2, r.c1, r.c2),
            opt_scaled.value
        ));
    }

    println!("ACCEPTANCE PASS: invariant suites (depth, diamonds, witnesses, conservation, scaling equivariance)");
}

/// Runs the binary's `bench` subcommand and returns the reported
/// seconds from its JSON output.
fn bench_subcommand_seconds(algo: &str, size: usize, seed: u64) -> f64 {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_gridloc"))
        .args([
            "bench",
            algo,
            "--size",
            &size.to_string(),
            "--seed",
            &seed.to_string(),
            "--format",
            "json",
        ])
        .output()
        .expect("spawn gridloc bench");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    v["seconds"].as_f64().unwrap()
}

#[test]
fn scaling_budgets_and_ratios() {
    // Absolute budgets, measured through the bench subcommand.
    let square = bench_subcommand_seconds("square", 2000, 7);
    assert!(square < 2.0, "square 2000x2000 took {}s", square);
    let diamond = bench_subcommand_seconds("diamond", 2000, 7);
    assert!(diamond < 2.0, "diamond 2000x2000 took {}s", diamond);
    let depth = bench_subcommand_seconds("depth", 2000, 7);
    assert!(depth < 2.0, "depth 2000x2000 took {}s", depth);
    let er = bench_subcommand_seconds("empty-rect", 1000, 7);
    assert!(er < 1.0, "empty-rect n=1000 took {}s", er);
    let peri = bench_subcommand_seconds("perimeter", 500, 7);
    assert!(peri < 10.0, "perimeter 500x500 took {}s", peri);

    // Doubling ratios, within 3x of the asymptotic prediction. Each
    // point is the best of three runs to damp scheduler noise.
    let measure = |algo: BenchAlgo, size: usize| -> f64 {
        (0..3)
            .map(|k| run_bench(algo, size, 7 + k).seconds)
            .fold(f64::INFINITY, f64::min)
    };
    let ratio_ok = |small: f64, big: f64, predicted: f64| {
        let measured = big / small;
        measured <= predicted * 3.0 && measured >= predicted / 3.0
    };
    // O(m*n) grids: doubling the side predicts 4x.
    assert!(ratio_ok(measure(BenchAlgo::Square, 1000), measure(BenchAlgo::Square, 2000), 4.0));
    assert!(ratio_ok(measure(BenchAlgo::Diamond, 1000), measure(BenchAlgo::Diamond, 2000), 4.0));
    assert!(ratio_ok(measure(BenchAlgo::Depth, 1000), measure(BenchAlgo::Depth, 2000), 4.0));
    // O(n^2) empty rectangle: doubling n predicts 4x.
    assert!(ratio_ok(
        measure(BenchAlgo::EmptyRect, 500),
        measure(BenchAlgo::EmptyRect, 1000),
        4.0
    ));
    // O(m^2*n) perimeter: doubling the side predicts 8x.
    assert!(ratio_ok(
        measure(BenchAlgo::Perimeter, 250),
        measure(BenchAlgo::Perimeter, 500),
        8.0
    ));

    println!("ACCEPTANCE PASS: scaling budgets and doubling ratios");
}
