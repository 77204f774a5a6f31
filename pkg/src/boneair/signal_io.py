"""Mono 16-bit PCM WAV I/O at 16 kHz, plus waveform utilities.

Quantization convention: integer samples are divided by 32768 on read and
float samples are multiplied by 32767 (rounded, clamped) on write.  The
asymmetry is the common PCM convention; it means read(write(x)) is exact
only for values already on the 16-bit grid.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass

import numpy as np

SAMPLE_RATE = 16000


class WavFormatError(ValueError):
    """File is not a mono 16-bit PCM RIFF/WAVE at the expected rate."""


class EmptySignalError(ValueError):
    """Operation needs at least one sample."""


class AmplitudeRangeError(ValueError):
    """Sample amplitudes fall outside [-1, 1]."""


class DegenerateSignalError(ValueError):
    """Signal is unusable for the operation (e.g. all zeros)."""


@dataclass
class Waveform:
    """A mono sampled signal with float64 amplitudes, nominally in [-1, 1]."""

    samples: np.ndarray
    sample_rate_hz: int = SAMPLE_RATE

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise ValueError(f"waveform samples must be 1-D, got shape {self.samples.shape}")
        if self.sample_rate_hz <= 0:
            raise ValueError(f"sample rate must be positive, got {self.sample_rate_hz}")

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate_hz


def read_wav(path) -> Waveform:
    """Read a mono 16-bit PCM WAV file sampled at 16 kHz.

    Raises WavFormatError naming the offending header field for any other
    flavour of WAV, and EmptySignalError for a zero-length data chunk.
    """
    try:
        reader = wave.open(str(path), "rb")
    except FileNotFoundError:
        raise
    except (wave.Error, EOFError) as exc:
        raise WavFormatError(f"{path}: not an uncompressed PCM RIFF/WAVE file ({exc})") from exc
    with reader:
        if reader.getcomptype() != "NONE":
            raise WavFormatError(f"{path}: compression type {reader.getcomptype()!r}, expected PCM")
        if reader.getnchannels() != 1:
            raise WavFormatError(f"{path}: {reader.getnchannels()} channels, expected mono")
        if reader.getsampwidth() != 2:
            raise WavFormatError(
                f"{path}: sample width {8 * reader.getsampwidth()} bit, expected 16 bit"
            )
        if reader.getframerate() != SAMPLE_RATE:
            raise WavFormatError(
                f"{path}: sample rate {reader.getframerate()} Hz, expected {SAMPLE_RATE} Hz"
            )
        n_frames = reader.getnframes()
        if n_frames == 0:
            raise EmptySignalError(f"{path}: empty data chunk")
        raw = reader.readframes(n_frames)
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / 32768.0
    return Waveform(samples, SAMPLE_RATE)


def write_wav(path, w: Waveform) -> None:
    """Write a waveform as mono 16-bit PCM.

    All amplitudes must already lie in [-1, 1]; out-of-range input raises
    AmplitudeRangeError rather than clipping silently.
    """
    x = w.samples
    if x.size == 0:
        raise EmptySignalError(f"{path}: refusing to write an empty waveform")
    peak = float(np.max(np.abs(x)))
    if peak > 1.0:
        raise AmplitudeRangeError(
            f"{path}: peak amplitude {peak:.6g} exceeds 1.0; normalize before writing"
        )
    quantized = np.clip(np.rint(x * 32767.0), -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as writer:
        writer.setnchannels(1)
        writer.setsampwidth(2)
        writer.setframerate(w.sample_rate_hz)
        writer.writeframes(quantized.tobytes())


def quantize(w: Waveform) -> Waveform:
    """Round a waveform onto the 16-bit grid used by write_wav/read_wav."""
    q = np.clip(np.rint(w.samples * 32767.0), -32768, 32767)
    return Waveform(q / 32768.0, w.sample_rate_hz)


def peak_normalize(w: Waveform, target_peak: float) -> tuple[Waveform, float]:
    """Scale linearly so the largest |sample| equals target_peak.

    Returns the scaled waveform and the gain that was applied.
    """
    if not 0.0 < target_peak <= 1.0:
        raise ValueError(f"target peak must be in (0, 1], got {target_peak}")
    peak = float(np.max(np.abs(w.samples))) if w.samples.size else 0.0
    if peak == 0.0:
        raise DegenerateSignalError("cannot peak-normalize an all-zero signal")
    gain = target_peak / peak
    return Waveform(w.samples * gain, w.sample_rate_hz), gain


def export_csv(w: Waveform, path) -> None:
    """Write `n,amplitude` lines (one per sample) for plotting.

    Amplitudes are printed with full round-trip precision (shortest repr),
    so parsing the file back reproduces the samples exactly.
    """
    if w.samples.size == 0:
        raise EmptySignalError(f"{path}: refusing to export an empty waveform")
    lines = ["n,amplitude"]
    lines.extend(f"{i},{float(v)!r}" for i, v in enumerate(w.samples))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")
