//! Paths, loops and the canonical orientation of a TFPL.

use tfpl::enumerate::enumerate_tfpls;
use tfpl::Tfpl;

fn main() {
    let f: Tfpl = enumerate_tfpls(3).nth(7).unwrap();
    for c in f.components() {
        match c.ends() {
            Some((a, b)) => println!("path {a:?} .. {b:?} ({} vertices)", c.vertices.len()),
            None => println!("loop through {} vertices", c.vertices.len()),
        }
    }
    let o = f.canonical_orientation().unwrap();
    println!("consistent: {}", o.is_consistent());
    println!("boundary {} read from the orientation {}", f.boundary().unwrap(), o.oriented_boundary());

    let text = f.to_text();
    let back: Tfpl = text.parse().unwrap();
    assert_eq!(back, f);
}
