//! Left and right drift, the orbit of an unstable TFPL and its tableaux.

use tfpl::drift::{orbit, wieland_left, wieland_right, Direction};
use tfpl::enumerate::enumerate_tfpls;
use tfpl::words::horizontal_predecessors;

fn main() {
    let f = enumerate_tfpls(4)
        .find(|f| f.drifters().len() == 2)
        .expect("some TFPL of size 4 has two drifters");
    println!("start {}", f.boundary().unwrap());

    let o = orbit(&f).unwrap();
    for (dir, arm) in [(Direction::Left, &o.left), (Direction::Right, &o.right)] {
        println!("{dir:?} arm:");
        for g in &arm.configs {
            println!("  {} with {} drifters", g.boundary().unwrap(), g.drifters().len());
        }
        println!("tableau\n{}", arm.tableau().unwrap());
    }

    let u = f.u_word();
    for um in horizontal_predecessors(&u) {
        let g = wieland_left(&f, Some(&um)).unwrap();
        let back = wieland_right(&g, Some(&f.v_word())).unwrap();
        println!("WL_{um} then WR_{}: back to start = {}", f.v_word(), back == f);
    }
}
