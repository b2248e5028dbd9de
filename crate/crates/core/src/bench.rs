//! Parse timing.

use std::fmt;
use std::time::{Duration, Instant};

use crate::syntax::{parse, ParseError};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub timings: Vec<Duration>,
    pub sentences: usize,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

impl BenchReport {
    pub fn total(&self) -> Duration {
        self.timings.iter().sum()
    }

    pub fn mean_ms(&self) -> f64 {
        if self.timings.is_empty() {
            0.0
        } else {
            ms(self.total()) / self.timings.len() as f64
        }
    }

    /// Mean parse time divided by the number of sentence blocks.
    pub fn per_sentence_ms(&self) -> f64 {
        self.mean_ms() / self.sentences.max(1) as f64
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.timings.iter().enumerate() {
            writeln!(f, "run={} ms={:.3}", i + 1, ms(*t))?;
        }
        writeln!(f, "total_ms={:.3}", ms(self.total()))?;
        write!(
            f,
            "mean_ms={:.3} per_sentence_ms={:.3}",
            self.mean_ms(),
            self.per_sentence_ms()
        )
    }
}

/// Parses `text` `iterations` times. Fails on the first run if it does not parse.
pub fn measure(text: &str, iterations: usize) -> Result<BenchReport, Vec<ParseError>> {
    let sentences = parse(text)?.sentences.len();
    let timings = (0..iterations)
        .map(|_| {
            let start = Instant::now();
            let doc = parse(text);
            let elapsed = start.elapsed();
            std::hint::black_box(doc).ok();
            elapsed
        })
        .collect();
    Ok(BenchReport { timings, sentences })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_format() {
        let text = "@ston @roles @actions a:{ id: e; syn: 1; } @sentences s:{ typ: AFF; act: [e]; } s:{ typ: AFF; act: [e]; } @end";
        let report = measure(text, 3).unwrap();
        assert_eq!(report.timings.len(), 3);
        assert_eq!(report.sentences, 2);
        let shown = report.to_string();
        let last = shown.lines().last().unwrap();
        assert!(last.starts_with("mean_ms=") && last.contains(" per_sentence_ms="), "{last}");
        assert_eq!(shown.lines().count(), 5);
        assert!(measure("@ston", 1).is_err());
    }
}
