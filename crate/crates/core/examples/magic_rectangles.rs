//! Prints a few magic rectangles and the shapes that have none.

use lacn::magic_rectangle;

fn main() {
    for (m, n) in [(3, 3), (2, 4), (3, 5), (4, 6), (5, 7)] {
        let r = magic_rectangle(m, n).expect("admissible shape");
        println!("{m}x{n}: rows sum to {}, columns to {}", r.row_constant(), r.column_constant());
        for row in r.rows() {
            println!("  {row:?}");
        }
    }
    for (m, n) in [(2, 2), (2, 3), (1, 5)] {
        println!("{m}x{n}: {}", magic_rectangle(m, n).unwrap_err());
    }
}
