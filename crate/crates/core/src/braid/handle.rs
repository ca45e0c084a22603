//! Dehornoy handle reduction: a word problem solver that shares no code with
//! the Garside normal form.
//!
//! A σᵢ-handle is a factor `σᵢ^e · v · σᵢ^{-e}` where `v` only uses generators
//! of index greater than `i`. Reducing it deletes the two ends and replaces
//! every `σ_{i+1}^d` inside by `σ_{i+1}^{-e} σᵢ^d σ_{i+1}^e`. Repeatedly reducing
//! the handle that closes first terminates, and the final word is empty iff the
//! braid is trivial: otherwise its lowest generator occurs with a single sign.

use super::word::{ArtinWord, Sign};

type Sym = (u8, i8);

fn to_syms(w: &ArtinWord) -> Vec<Sym> {
    w.letters()
        .iter()
        .map(|l| (l.index, if l.sign == Sign::Plus { 1 } else { -1 }))
        .collect()
}

/// Finds the handle whose closing letter is leftmost.
fn first_handle(word: &[Sym]) -> Option<(usize, usize)> {
    for close in 1..word.len() {
        let (i, e) = word[close];
        for open in (0..close).rev() {
            let (j, d) = word[open];
            if j < i {
                break;
            }
            if j == i {
                if d == -e {
                    return Some((open, close));
                }
                break;
            }
        }
    }
    None
}

fn reduce_once(word: &[Sym], open: usize, close: usize) -> Vec<Sym> {
    let (i, e) = word[open];
    let mut out = Vec::with_capacity(word.len() + 2 * (close - open));
    out.extend_from_slice(&word[..open]);
    for &(j, d) in &word[open + 1..close] {
        if j == i + 1 {
            out.push((j, -e));
            out.push((i, d));
            out.push((j, e));
        } else {
            out.push((j, d));
        }
    }
    out.extend_from_slice(&word[close + 1..]);
    out
}

/// Fully handle-reduces `w`, returning the handle-free result.
pub fn handle_reduce(w: &ArtinWord) -> ArtinWord {
    let mut word = to_syms(w);
    while let Some((open, close)) = first_handle(&word) {
        word = reduce_once(&word, open, close);
    }
    ArtinWord(
        word.into_iter()
            .map(|(i, s)| {
                super::word::ArtinLetter::new(i, if s > 0 { Sign::Plus } else { Sign::Minus })
            })
            .collect(),
    )
}

/// True iff `w` is the identity braid.
pub fn handle_reduce_trivial(w: &ArtinWord) -> bool {
    handle_reduce(w).is_empty()
}
