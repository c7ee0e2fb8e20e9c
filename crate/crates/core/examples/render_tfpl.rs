//! ASCII and SVG pictures.

use tfpl::enumerate::enumerate_tfpls;
use tfpl::render::{render, Format};

fn main() {
    let f = enumerate_tfpls(3).find(|f| !f.drifters().is_empty()).unwrap();
    print!("{}", render(&f, Format::Ascii));
    let path = std::env::temp_dir().join("tfpl.svg");
    std::fs::write(&path, render(&f, Format::Svg)).unwrap();
    println!("wrote {}", path.display());
}
