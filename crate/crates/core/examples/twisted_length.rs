// Twisted lengths for A₁,₂ and its twisted conjugates y·A₁,₂, comparing the
// definition with the closed forms.
//
// The closed forms with a `-2r⁺` term disagree with the definition; the
// variants without it agree. The output shows both side by side.

use alcove_kit::{
    build_root_system, twisted_length_def, twisted_length_lemma, twisted_length_lemma_rminus,
    twisted_length_prop, twisted_length_theorem, twisted_length_theorem_rminus, AffineElement,
    BiclosedSpec, Result, SimpleSet, SubsetPair,
};

pub fn run_example() -> Result<()> {
    let a2 = build_root_system("A2".parse()?);

    let x = AffineElement::from_word(&a2, &[0, 1, 2, 1])?;
    let standard = BiclosedSpec::raw(&a2, SubsetPair::empty());
    assert_eq!(twisted_length_def(&standard, &x), twisted_length_prop(&x));
    println!("A = (∅, ∅): ℓ_A(x) = {}", twisted_length_prop(&x));

    let s0 = AffineElement::from_word(&a2, &[0])?;
    for pair in SubsetPair::all(a2.rank()) {
        let spec = BiclosedSpec::raw(&a2, pair);
        println!(
            "{pair}: def {:>2}  with r+ {:>2}  r- only {:>2}",
            twisted_length_def(&spec, &s0),
            twisted_length_lemma(&pair, &s0),
            twisted_length_lemma_rminus(&pair, &s0),
        );
        assert_eq!(
            twisted_length_def(&spec, &s0),
            twisted_length_lemma_rminus(&pair, &s0)
        );
    }

    let pair = SubsetPair::new(SimpleSet::parse(&a2, "1")?, SimpleSet::EMPTY);
    let y = AffineElement::from_word(&a2, &[2, 0])?;
    let spec = BiclosedSpec::new(pair, y);
    println!(
        "y·A for {pair}, y = s2 s0: def {}  with R+ {}  R- only {}",
        twisted_length_def(&spec, &x),
        twisted_length_theorem(&spec, &x)?,
        twisted_length_theorem_rminus(&spec, &x)?,
    );
    assert_eq!(
        twisted_length_def(&spec, &x),
        twisted_length_theorem_rminus(&spec, &x)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
