//! Following single drifters: `L(𝔡) + R(𝔡) = R₁ + L₀ + 1`.

use tfpl::drift::trace_drifter;
use tfpl::enumerate::enumerate_tfpls;

fn main() {
    let n = 4;
    let (mut total, mut balanced) = (0, 0);
    for f in enumerate_tfpls(n) {
        if f.boundary().unwrap().excess() > 2 {
            continue;
        }
        for d in f.drifters() {
            let t = trace_drifter(&f, d).unwrap();
            total += 1;
            balanced += t.balanced() as usize;
            if total <= 5 {
                println!(
                    "{} {d}: L={} R={} R1={} L0={} leaves {}",
                    f.boundary().unwrap(),
                    t.left_steps,
                    t.right_steps,
                    t.r1,
                    t.l0,
                    if t.leaves_left() { "left" } else { "right" }
                );
            }
        }
    }
    println!("N={n}: {balanced} of {total} drifters balanced");
}
