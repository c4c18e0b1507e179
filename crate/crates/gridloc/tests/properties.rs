//! Property tests for the parsing layer and the empty-rectangle
//! monotonicity invariant.

use proptest::prelude::*;

use gridloc::empty_rect::max_empty_rectangle;
use gridloc::grid::{parse_binary_grid, parse_points, parse_real_grid, BinaryGrid, PointSet, RealGrid};

fn binary_grid_strategy() -> impl Strategy<Value = BinaryGrid> {
    (1usize..=8, 1usize..=8)
        .prop_flat_map(|(m, n)| {
            proptest::collection::vec(0u8..=1, m * n).prop_map(move |cells| BinaryGrid::new(m, n, cells))
        })
}

fn real_grid_strategy() -> impl Strategy<Value = RealGrid> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(m, n)| {
            proptest::collection::vec(-1000.0f64..1000.0, m * n)
                .prop_map(move |cells| RealGrid::new(m, n, cells))
        })
}

proptest! {
    #[test]
    fn binary_grid_round_trip(g in binary_grid_strategy()) {
        let parsed = parse_binary_grid(&g.serialize()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn real_grid_round_trip(g in real_grid_strategy()) {
        let parsed = parse_real_grid(&g.serialize()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn point_set_round_trip(
        coords in proptest::collection::vec((0.0f64..=100.0, 0.0f64..=100.0), 0..10)
    ) {
        let ps = PointSet::new(100.0, 100.0, coords);
        let parsed = parse_points(&ps.serialize()).unwrap();
        prop_assert_eq!(parsed, ps);
    }

    #[test]
    fn adding_points_never_grows_empty_area(
        coords in proptest::collection::vec((0.0f64..=10.0, 0.0f64..=10.0), 0..8)
    ) {
        let mut prev = f64::INFINITY;
        for k in 0..=coords.len() {
            let ps = PointSet::new(10.0, 10.0, coords[..k].to_vec());
            let area = max_empty_rectangle(&ps).area;
            prop_assert!(area <= prev + 1e-9, "area grew: {} -> {}", prev, area);
            prev = area;
        }
    }
}
