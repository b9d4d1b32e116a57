// Builds a few root systems and prints their positive roots, Gram matrix,
// highest short root and the interior point of the fundamental alcove.

use alcove_kit::{build_root_system, Result};

pub fn run_example() -> Result<()> {
    for name in ["A2", "B2", "G2", "C3"] {
        let rs = build_root_system(name.parse()?);
        println!(
            "{} ({} positive roots)",
            rs.cartan_type(),
            rs.num_positive()
        );
        println!("  gram: {:?}", rs.gram());
        for (i, root) in rs.positive_roots().iter().enumerate() {
            println!("  {:>2} {:<22} height {}", i, root.label(), root.height());
        }
        let theta = rs.highest_short_root();
        let x0: Vec<String> = rs.interior_point().iter().map(|q| q.to_string()).collect();
        println!("  theta = {}, x0 = ({})", theta.label(), x0.join(", "));
        assert_eq!(
            rs.pairing(rs.interior_point(), theta)?.to_string(),
            format!("{}/{}", rs.interior_scale() - 1, rs.interior_scale())
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
