//! Exhaustive enumeration and the count table `t`/`s` by boundary.

use tfpl::enumerate::{count_tables, enumerate_filtered, BoundaryFilter};
use tfpl::BoundaryTriple;

fn main() {
    for n in 1..=5 {
        let table = count_tables(n);
        println!("N={n}: {} TFPLs over {} boundaries", table.total(), table.entries.len());
    }

    let b: BoundaryTriple = "0011,0110,1100".parse().unwrap();
    let table = count_tables(4);
    let c = table.get(&b.u, &b.v, &b.w);
    println!("{b}: t = {}, s = {}, exc = {}", c.t, c.s, b.excess());
    for f in enumerate_filtered(4, BoundaryFilter::triple(&b)) {
        println!("{} drifters\n{}", f.drifters().len(), f.to_text());
    }

    print!("{}", count_tables(2).to_csv());
}
