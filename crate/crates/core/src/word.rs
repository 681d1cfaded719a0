use std::borrow::Borrow;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Size of the A-Z alphabet.
pub const ALPHABET_LEN: usize = 26;

/// Maps a letter to its index 0..26, uppercasing ASCII lowercase.
pub fn letter_index(c: char) -> Result<usize> {
    let upper = c.to_ascii_uppercase();
    if upper.is_ascii_uppercase() {
        Ok(usize::from(upper as u8 - b'A'))
    } else {
        Err(Error::OutOfAlphabet(c))
    }
}

/// A normalized word: ASCII uppercase letters only. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(String);

impl Word {
    /// Trims surrounding whitespace, uppercases and checks every character is
    /// a letter A-Z.
    pub fn new(text: &str) -> Result<Word> {
        let text = text.trim();
        let mut out = String::with_capacity(text.len());
        for c in text.chars() {
            letter_index(c)?;
            out.push(c.to_ascii_uppercase());
        }
        Ok(Word(out))
    }

    /// Like [`Word::new`] but rejects the empty word.
    pub fn non_empty(text: &str) -> Result<Word> {
        let word = Word::new(text)?;
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(word)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl Deref for Word {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Word {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Word {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<&str> for Word {
    type Error = Error;

    fn try_from(text: &str) -> Result<Word> {
        Word::new(text)
    }
}
