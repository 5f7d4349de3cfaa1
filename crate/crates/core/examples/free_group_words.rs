//! Reduced words: parsing, multiplication, inverses and prefixes.
//!
//! cargo run -p schreier-core --example free_group_words

use schreier_core::{Alphabet, Result};

fn main() -> Result<()> {
    let alphabet = Alphabet::new(["x", "y"])?;

    let w = alphabet.parse("x y y^-1 x * y^3")?;
    let v = alphabet.parse("y^-2 x^-1")?;
    println!("w          = {}", alphabet.format(&w));
    println!("v          = {}", alphabet.format(&v));
    println!("w v        = {}", alphabet.format(&w.concat(&v)));
    println!("w^-1       = {}", alphabet.format(&w.invert()));
    println!("w w^-1     = {}", alphabet.format(&w.concat(&w.invert())));

    println!("prefixes of w:");
    for p in w.prefixes() {
        println!("  {}", alphabet.format(&p));
    }

    let mut words = [
        alphabet.parse("x^2")?,
        alphabet.parse("x^-1")?,
        alphabet.parse("y")?,
        alphabet.parse("1")?,
        alphabet.parse("x y^-1")?,
    ];
    words.sort();
    let sorted: Vec<String> = words.iter().map(|w| alphabet.format(w)).collect();
    println!("shortlex order: {}", sorted.join(" < "));

    for bad in ["z", "x^0", "x * * y"] {
        println!("parse {bad:?}: {}", alphabet.parse(bad).unwrap_err());
    }
    Ok(())
}
