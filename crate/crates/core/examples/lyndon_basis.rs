//! Lyndon basis of the free Lie ring on x, y and reduction of a few
//! bracket expressions to it.

use lie_torsion::cli::{parse_element, print_element};
use lie_torsion::lie::{lyndon_words, necklace_count, Alphabet};

fn main() {
    let alphabet = Alphabet::standard(2);
    let words = lyndon_words(&alphabet, 6, |_| 1);
    for n in 1..=6u32 {
        let here: Vec<_> = words.iter().filter(|w| w.len() == n as usize).collect();
        println!(
            "degree {n}: {} words (necklace count {})",
            here.len(),
            necklace_count(2, n)
        );
        for w in here {
            println!(
                "  {:<8} {}",
                alphabet.format_word(w.letters()).replace(' ', ""),
                w.bracketing_string(&alphabet)
            );
        }
    }

    for text in [
        "[y,x]",
        "[x,[x,y]] + [y,x,x]",
        "[[x,y],[x,y]]",
        "[y,x,x,y] - [y,x,y,x]",
        "3*[[y,x],[y,x,x]]",
    ] {
        let e = parse_element(text, &alphabet).expect("valid expression");
        println!("{text:>24}  =  {}", print_element(&e, &alphabet));
    }
}
