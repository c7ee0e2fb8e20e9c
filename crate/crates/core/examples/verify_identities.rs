//! Every counting identity and structural law at a given size, as reports.

use tfpl::enumerate::count_tables;
use tfpl::verify;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let table = count_tables(n);
    let reports = [
        verify::verify_theorem1(&table, n).unwrap(),
        verify::verify_exc0(&table).unwrap(),
        verify::verify_exc1(&table).unwrap(),
        verify::verify_necessary_conditions(&table),
        verify::verify_corollary2(n),
        verify::verify_phi_census(n),
        verify::verify_drift_laws(n),
        verify::verify_structure(n),
    ];
    for r in &reports {
        println!("{:<10} checked {:>6} failed {}", r.identity, r.checked, r.failed);
        for note in &r.notes {
            println!("           {note}");
        }
    }
}
