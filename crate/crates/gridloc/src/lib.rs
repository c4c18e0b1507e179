//! Grid analytics for facility location on raster maps: largest
//! patterned squares, all-ones diamonds, empty rectangles among point
//! obstacles, maximum perimeter-sum subrectangles, and nesting depth
//! of connected components. Every fast algorithm ships with a
//! brute-force counterpart in [`oracle`] for differential checking.

pub mod bench;
pub mod depth;
pub mod diamonds;
pub mod empty_rect;
pub mod error;
pub mod grid;
pub mod oracle;
pub mod perimeter;
pub mod squares;

pub use error::Error;
