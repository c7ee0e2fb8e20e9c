//! Boundary words, their Young diagrams and the coefficients `g_{σ,σ⁺}`.

use tfpl::words::{
    g_coefficient, is_horizontal_strip, restricted_tableaux, to_shape, Word,
};

fn main() {
    let u: Word = "0101".parse().unwrap();
    let up: Word = "1010".parse().unwrap();
    println!("d({u}) = {}, d({up}) = {}", u.inversions(), up.inversions());
    println!("λ({u}) = {:?}, λ({up}) = {:?}", to_shape(&u).rows(), to_shape(&up).rows());
    println!("horizontal strip: {}", is_horizontal_strip(&u, &up).unwrap());

    let tableaux = restricted_tableaux(&to_shape(&u), &to_shape(&up)).unwrap();
    println!("g = {} ({} tableaux)", g_coefficient(&u, &up).unwrap(), tableaux.len());
    for t in &tableaux {
        println!("{t}");
    }

    let v: Word = "0110".parse().unwrap();
    println!("{v}* = {}", v.star());
}
