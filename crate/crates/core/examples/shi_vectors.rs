// Shi vectors by both algorithms, and the length read off them.

use alcove_kit::{
    build_root_system, parse_word, shi_vector, shi_vector_oracle, AffineElement, Result,
};

pub fn run_example() -> Result<()> {
    let b2 = build_root_system("B2".parse()?);
    for word in ["", "1", "0", "0,1,0", "1,2,1,2", "0,1,2,1,0,2"] {
        let w = AffineElement::from_word(&b2, &parse_word(word)?)?;
        let geometric = shi_vector(&w);
        let algebraic = shi_vector_oracle(&w);
        assert_eq!(geometric, algebraic);
        println!(
            "w = [{word}]  k = {:?}  length = {}  json = {}",
            geometric.entries(),
            geometric.length(),
            serde_json::to_string(&geometric).expect("serializable"),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
