//! Words over the generator set and their letter rendering.

/// Renders generator `i` as a letter: index into `a..z` when the alphabet
/// fits, `x<i>` otherwise.
pub fn letter(i: usize, n: usize) -> String {
    if n <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// A finite word over the generators `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenWord {
    letters: Vec<usize>,
}

impl GenWord {
    pub fn new(letters: Vec<usize>) -> Self {
        GenWord { letters }
    }

    pub fn empty() -> Self {
        GenWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord { letters }
    }

    /// All cyclic rotations, starting with the word itself.
    pub fn rotations(&self) -> Vec<GenWord> {
        let r = self.letters.len().max(1);
        (0..r)
            .map(|k| {
                let mut letters = self.letters[k..].to_vec();
                letters.extend_from_slice(&self.letters[..k]);
                GenWord { letters }
            })
            .collect()
    }

    /// True when every letter equals the first (a power of one generator).
    pub fn is_generator_power(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] == w[1])
    }

    pub fn render(&self, n: usize) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters.iter().map(|&i| letter(i, n)).collect()
    }
}

impl From<&[usize]> for GenWord {
    fn from(letters: &[usize]) -> Self {
        GenWord::new(letters.to_vec())
    }
}
