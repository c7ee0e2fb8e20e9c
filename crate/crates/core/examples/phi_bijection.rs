//! The map `f ↦ (S, g, T)` onto tableaux and stable TFPLs, and its inverse.

use tfpl::enumerate::enumerate_tfpls;
use tfpl::phi::{phi, psi, PhiCase};

fn main() {
    let n = 4;
    let mut shown = [false; 4];
    for f in enumerate_tfpls(n) {
        if f.boundary().unwrap().excess() != 2 {
            continue;
        }
        let t = phi(&f).unwrap();
        assert_eq!(psi(&t).unwrap(), f);
        let k = t.case() as usize;
        if shown[k] {
            continue;
        }
        shown[k] = true;
        println!("{:?}: {} -> g with {}", t.case(), f.boundary().unwrap(), t.g.boundary().unwrap());
        println!("S:\n{}T:\n{}", t.s, t.t);
    }
    assert!(shown[PhiCase::Mixed as usize]);
}
