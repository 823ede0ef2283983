//! Output plumbing: the stdout-or-file sink and the fixed float format
//! that makes CSV output byte-reproducible.

use crate::Settings;
use anyhow::Context;
use std::io::Write;
use std::path::Path;

/// 17 significant digits: round-trips every f64 exactly, so downstream
/// plotting reproduces the computed values bit for bit.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub enum Sink {
    Stdout(std::io::Stdout),
    File(std::io::BufWriter<std::fs::File>),
}

impl Sink {
    pub fn open(out: Option<&Path>) -> anyhow::Result<Sink> {
        Ok(match out {
            None => Sink::Stdout(std::io::stdout()),
            Some(path) => Sink::File(std::io::BufWriter::new(
                std::fs::File::create(path)
                    .with_context(|| format!("cannot create {}", path.display()))?,
            )),
        })
    }

    pub fn for_settings(settings: &Settings) -> anyhow::Result<Sink> {
        Sink::open(settings.out.as_deref())
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        match self {
            Sink::Stdout(s) => s.write(buf),
            Sink::File(f) => f.write(buf),
        }
    }

    fn flush(&mut self) -> std::io::Result<()> {
        match self {
            Sink::Stdout(s) => s.flush(),
            Sink::File(f) => f.flush(),
        }
    }
}
