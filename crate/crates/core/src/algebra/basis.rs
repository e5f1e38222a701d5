/// Normal-form words of one degree, with the factorizations the expansion needs.
///
/// Word `b` equals `word(prefix[b]) · last[b]` and `first[b] · word(suffix[b])`,
/// where prefixes and suffixes index the basis one degree down.
#[derive(Clone, Debug)]
pub(crate) struct Basis {
    degree: usize,
    words: Vec<u8>,
    prefix: Vec<u32>,
    last: Vec<u8>,
    first: Vec<u8>,
    suffix: Vec<u32>,
}

impl Basis {
    /// The single empty word of degree 0.
    pub(crate) fn unit() -> Self {
        Basis { degree: 0, words: Vec::new(), prefix: vec![0], last: vec![0], first: vec![0], suffix: vec![0] }
    }

    pub(crate) fn empty(degree: usize) -> Self {
        Basis { degree, words: Vec::new(), prefix: Vec::new(), last: Vec::new(), first: Vec::new(), suffix: Vec::new() }
    }

    pub(crate) fn push(&mut self, word: &[u8], prefix: usize, suffix: usize) {
        debug_assert_eq!(word.len(), self.degree);
        self.words.extend_from_slice(word);
        self.prefix.push(prefix as u32);
        self.last.push(*word.last().expect("positive degree"));
        self.first.push(word[0]);
        self.suffix.push(suffix as u32);
    }

    pub(crate) fn len(&self) -> usize {
        self.prefix.len()
    }

    pub(crate) fn word(&self, b: usize) -> &[u8] {
        &self.words[b * self.degree..(b + 1) * self.degree]
    }

    pub(crate) fn prefix(&self, b: usize) -> usize {
        self.prefix[b] as usize
    }

    pub(crate) fn last(&self, b: usize) -> usize {
        self.last[b] as usize
    }

    pub(crate) fn first(&self, b: usize) -> usize {
        self.first[b] as usize
    }

    pub(crate) fn suffix(&self, b: usize) -> usize {
        self.suffix[b] as usize
    }
}
