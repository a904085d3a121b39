#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

/// Expressions covering every grammar production and literal form, with the
/// tree each must parse to.
pub const CORPUS: [(&str, &str); 30] = [
    ("3", "3"),
    ("2.48", "62/25"),
    ("3.", "3"),
    ("7/9", "7/9"),
    ("0.(7)", "7/9"),
    ("1.2(34)", "611/495"),
    ("0.5(0)", "1/2"),
    ("-5", "(neg 5)"),
    ("--5", "(neg (neg 5))"),
    ("---1.5", "(neg (neg (neg 3/2)))"),
    ("1+2", "(+ 1 2)"),
    ("1-2-3", "(- (- 1 2) 3)"),
    ("1+2*3", "(+ 1 (* 2 3))"),
    ("(1+2)*3", "(* (+ 1 2) 3)"),
    ("8 / 4 / 2", "(/ (/ 8 4) 2)"),
    ("8/4/2", "(/ 2 2)"),
    ("1.2*-2.6+5.6", "(+ (* 6/5 (neg 13/5)) 28/5)"),
    ("sqrt(2)", "(sqrt 2)"),
    ("sqrt(2)*sqrt(2)", "(* (sqrt 2) (sqrt 2))"),
    ("sqrt(sqrt(16))", "(sqrt (sqrt 16))"),
    ("sqrt(1/4 + 0.(3))", "(sqrt (+ 1/4 1/3))"),
    ("-sqrt(2)", "(neg (sqrt 2))"),
    ("-(1+2)", "(neg (+ 1 2))"),
    ("2*-3", "(* 2 (neg 3))"),
    ("-2*3", "(* (neg 2) 3)"),
    ("1 - -1", "(- 1 (neg 1))"),
    ("((((7))))", "7"),
    ("0.(7)+0.(23)", "(+ 7/9 23/99)"),
    ("1/0", "(/ 1 0)"),
    ("sqrt(2) / (1 - sqrt(2)) * -0.1", "(* (/ (sqrt 2) (- 1 (sqrt 2))) (neg 1/10))"),
];

const PIECES: [&str; 24] = [
    "0", "1", "2", "7", "9", "12", ".", ".(", "(", ")", "+", "-", "*", "/", " ", "sqrt", "sqrt(",
    "0.(3)", "1/3", "2.5", "x", "^", "\u{2212}", "é",
];

/// A random string built from grammar fragments and a few stray
/// characters.
pub fn fuzz_string(rng: &mut StdRng) -> String {
    let len = rng.gen_range(0..16);
    (0..len).map(|_| PIECES[rng.gen_range(0..PIECES.len())]).collect()
}

/// A random literal in one of the accepted forms.
pub fn literal(rng: &mut StdRng) -> String {
    match rng.gen_range(0..4) {
        0 => rng.gen_range(0..100_000u32).to_string(),
        1 => format!("{}.{}", rng.gen_range(0..1000u32), rng.gen_range(0..1000u32)),
        2 => format!("{}/{}", rng.gen_range(0..1000u32), rng.gen_range(1..1000u32)),
        _ => format!(
            "{}.{}({})",
            rng.gen_range(0..100u32),
            rng.gen_range(0..100u32),
            rng.gen_range(0..1000u32)
        ),
    }
}
