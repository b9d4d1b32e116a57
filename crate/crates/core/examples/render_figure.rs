// Searches B2 for an element with ℓ = 4 and ℓ_A = -4 and draws it.

use alcove_kit::svg_annotation;
use alcove_kit::{
    build_root_system, enumerate, render_alcoves, twisted_length_prop, BiclosedSpec, RenderSpec,
    Result, SubsetPair,
};

pub fn run_example() -> Result<()> {
    let b2 = build_root_system("B2".parse()?);
    let table = enumerate(&b2, 4)?;
    let witness = table
        .by_length(4)
        .iter()
        .find(|e| twisted_length_prop(&e.element) == -4)
        .expect("B2 has an element of length 4 and twisted length -4");
    println!("witness word: {:?}", witness.word);

    let spec = RenderSpec::new(
        witness.element.clone(),
        BiclosedSpec::raw(&b2, SubsetPair::empty()),
    );
    let svg = render_alcoves(&spec)?;
    let (length, marked, twisted) = svg_annotation(&svg).expect("annotated");
    assert_eq!(twisted, length - 2 * marked);
    println!("ℓ = {length}, marked = {marked}, ℓ_A = {twisted}");

    let path = std::env::temp_dir().join("alcove-kit-figure.svg");
    std::fs::write(&path, &svg).expect("temp dir is writable");
    println!("wrote {}", path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
