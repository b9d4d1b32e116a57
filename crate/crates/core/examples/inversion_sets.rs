// Inversion sets N(w) and the cocycle law N(xy) = N(x) + x N(y) x⁻¹.

use alcove_kit::{build_root_system, cocycle_check, inversion_set, AffineElement, Result};

pub fn run_example() -> Result<()> {
    let g2 = build_root_system("G2".parse()?);
    let x = AffineElement::from_word(&g2, &[0, 1, 2])?;
    let y = AffineElement::from_word(&g2, &[2, 1, 0, 1])?;
    for (name, w) in [("x", &x), ("y", &y), ("xy", &x.multiply(&y)?)] {
        let n = inversion_set(w);
        println!("N({name}) has {} reflections:", n.len());
        for (root, level) in n.to_pairs(&g2) {
            println!("    {root:?} at level {level}");
        }
    }
    assert!(cocycle_check(&x, &y)?);
    println!("cocycle law holds for (x, y)");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
