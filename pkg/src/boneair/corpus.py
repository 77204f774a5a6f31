"""Paired corpus builder: clean speech-like utterances, noise classes,
bone-conduction channel simulation, SNR mixing, and the JSON-lines manifest.

Every generated sample is a deterministic function of the master seed.
Sub-streams are derived from (seed, label, indices) tuples so that records
can be regenerated independently and in any order.
"""

from __future__ import annotations

import json
import zlib
from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np
from scipy import signal as sps

from boneair.signal_io import (
    SAMPLE_RATE,
    DegenerateSignalError,
    Waveform,
    peak_normalize,
    read_wav,
    write_wav,
)

TRAIN_NOISES = ("talkers", "piano", "siren", "ssn")
TEST_NOISES = ("car", "babycry", "helicopter")
NOISE_TYPES = TRAIN_NOISES + TEST_NOISES

TRAIN_SNRS_DB = (-4.0, -1.0, 2.0, 5.0)
TEST_SNRS_DB = (-5.0, 0.0, 5.0, 10.0)

DEFAULT_COUNTS = (243, 27, 50)

CLEAN_PEAK = 0.9


class ChannelConfigError(ValueError):
    """Bone-conduction channel parameters are invalid or unstable."""


def substream(seed: int, *path) -> np.random.Generator:
    """Deterministic RNG for a named sub-stream of the master seed.

    Path elements may be ints or short labels; labels hash via crc32 so the
    mapping is stable across runs and platforms.
    """
    parts = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    for p in path:
        if isinstance(p, str):
            parts.append(zlib.crc32(p.encode("utf-8")))
        else:
            parts.append(int(p) & 0xFFFFFFFFFFFFFFFF)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(parts)))


# ---------------------------------------------------------------------------
# Bone-conduction channel
# ---------------------------------------------------------------------------

@dataclass
class BcmChannel:
    """Discrete low-pass standing in for the bone-conduction pickup.

    b, a are transfer-function coefficients with a[0] == 1.
    """

    b: np.ndarray
    a: np.ndarray
    cutoff_hz: float = 0.0
    order: int = 0

    def __post_init__(self):
        self.b = np.asarray(self.b, dtype=np.float64)
        self.a = np.asarray(self.a, dtype=np.float64)
        if abs(self.a[0] - 1.0) > 1e-12:
            raise ChannelConfigError("denominator must be normalized (a[0] == 1)")
        dc = np.sum(self.b) / np.sum(self.a)
        if abs(dc - 1.0) > 1e-9:
            raise ChannelConfigError(f"DC gain {dc!r} differs from 1 by more than 1e-9")
        poles = np.roots(self.a)
        if poles.size and np.max(np.abs(poles)) >= 1.0:
            raise ChannelConfigError("channel filter is unstable (pole on/outside unit circle)")


def design_bcm_channel(cutoff_hz: float, order: int = 4) -> BcmChannel:
    """Butterworth low-pass (bilinear transform, prewarped) at 16 kHz."""
    if not 0.0 < cutoff_hz < SAMPLE_RATE / 2:
        raise ChannelConfigError(
            f"cutoff must lie in (0, {SAMPLE_RATE // 2}) Hz, got {cutoff_hz}"
        )
    if order not in (2, 4, 6):
        raise ChannelConfigError(f"order must be 2, 4 or 6, got {order}")
    b, a = sps.butter(order, cutoff_hz, btype="low", fs=SAMPLE_RATE)
    return BcmChannel(b=b, a=a, cutoff_hz=float(cutoff_hz), order=int(order))


def simulate_bcm(clean: Waveform, ch: BcmChannel) -> Waveform:
    """Zero-phase application of the channel: filter, reverse, filter, reverse.

    Doubles the magnitude rolloff and cancels phase distortion; output length
    equals input length.
    """
    x = clean.samples
    y = sps.lfilter(ch.b, ch.a, x)
    y = sps.lfilter(ch.b, ch.a, y[::-1])[::-1]
    return Waveform(y, clean.sample_rate_hz)


# ---------------------------------------------------------------------------
# SNR mixing
# ---------------------------------------------------------------------------

def mix_at_snr(clean: Waveform, noise: Waveform, snr_db: float) -> tuple[Waveform, float]:
    """Add scaled noise so that 10*log10(P_clean / P_scaled_noise) == snr_db.

    Returns the mixture and the gain applied to the noise.
    """
    if len(clean) != len(noise):
        raise ValueError(f"length mismatch: clean {len(clean)} vs noise {len(noise)}")
    p_clean = float(np.mean(clean.samples**2))
    p_noise = float(np.mean(noise.samples**2))
    if p_clean == 0.0:
        raise DegenerateSignalError("clean signal has zero power")
    if p_noise == 0.0:
        raise DegenerateSignalError("noise signal has zero power")
    gain = float(np.sqrt(p_clean / (p_noise * 10.0 ** (snr_db / 10.0))))
    noisy = Waveform(clean.samples + gain * noise.samples, clean.sample_rate_hz)
    return noisy, gain


def measured_snr_db(clean: Waveform, noisy: Waveform) -> float:
    """SNR implied by a (clean, noisy) pair, treating noisy - clean as noise."""
    p_clean = float(np.mean(clean.samples**2))
    residual = noisy.samples - clean.samples
    p_noise = float(np.mean(residual**2))
    if p_clean == 0.0 or p_noise == 0.0:
        raise DegenerateSignalError("zero-power signal in SNR measurement")
    return 10.0 * float(np.log10(p_clean / p_noise))


# ---------------------------------------------------------------------------
# Utterance synthesis
# ---------------------------------------------------------------------------

SYLLABLES_PER_UTTERANCE = 10


def _resonator(x: np.ndarray, center_hz: float, bandwidth_hz: float) -> np.ndarray:
    """Second-order all-pole resonator, peak gain normalized to ~1."""
    r = np.exp(-np.pi * bandwidth_hz / SAMPLE_RATE)
    theta = 2.0 * np.pi * center_hz / SAMPLE_RATE
    a = np.array([1.0, -2.0 * r * np.cos(theta), r * r])
    # unity gain at the resonance frequency
    w = np.exp(1j * theta)
    g = abs(w * w + a[1] * w + a[2])
    return sps.lfilter([g], a, x)


def _fade_envelope(n: int, fade_frac: float = 0.15) -> np.ndarray:
    """Raised-cosine attack/decay envelope over n samples."""
    env = np.ones(n)
    nf = max(1, int(n * fade_frac))
    ramp = 0.5 - 0.5 * np.cos(np.pi * np.arange(nf) / nf)
    env[:nf] = ramp
    env[-nf:] *= ramp[::-1]
    return env


def _voiced_syllable(rng: np.random.Generator, n: int) -> np.ndarray:
    """Pulse-train excitation with gliding pitch through parallel formants."""
    f0_start = rng.uniform(90.0, 250.0)
    f0_end = np.clip(f0_start * rng.uniform(0.7, 1.3), 90.0, 250.0)
    f0 = np.linspace(f0_start, f0_end, n)
    phase = np.cumsum(f0) / SAMPLE_RATE
    # one unit impulse per completed pitch period
    excitation = np.zeros(n)
    excitation[np.diff(np.floor(phase), prepend=0.0) > 0] = 1.0
    excitation += 0.02 * rng.standard_normal(n)  # aspiration

    formants = [
        (rng.uniform(280.0, 900.0), rng.uniform(60.0, 120.0), 1.0),
        (rng.uniform(900.0, 2400.0), rng.uniform(90.0, 200.0), 0.55),
        (rng.uniform(2400.0, 3600.0), rng.uniform(120.0, 280.0), 0.32),
        (rng.uniform(3600.0, 6500.0), rng.uniform(200.0, 450.0), 0.18),
    ]
    n_formants = int(rng.integers(2, 5))
    out = np.zeros(n)
    for center, bw, amp in formants[:n_formants]:
        out += amp * _resonator(excitation, center, bw)
    return out * _fade_envelope(n)


def _fricative_syllable(rng: np.random.Generator, n: int) -> np.ndarray:
    """Noise excitation through a single high-frequency resonance."""
    center = rng.uniform(3000.0, 6500.0)
    bw = rng.uniform(800.0, 2000.0)
    out = _resonator(rng.standard_normal(n), center, bw)
    return 0.5 * out * _fade_envelope(n, fade_frac=0.2)


def synth_utterance(seed: int, duration_s: float) -> Waveform:
    """Deterministic speech-like utterance: 10 syllables with silences.

    A mix of voiced (pulse-train + formants) and fricative (shaped noise)
    syllables keeps spectral energy well above 2 kHz, which the
    bone-conduction channel then visibly removes.
    """
    if not 1.0 <= duration_s <= 10.0:
        raise ValueError(f"duration must be in [1, 10] s, got {duration_s}")
    rng = substream(seed, "utterance")
    n_total = int(round(duration_s * SAMPLE_RATE))

    n_syl = SYLLABLES_PER_UTTERANCE
    silence_frac = rng.uniform(0.20, 0.30)
    syl_weights = rng.uniform(0.6, 1.4, size=n_syl)
    gap_weights = rng.uniform(0.3, 1.0, size=n_syl + 1)
    n_speech = int(round(n_total * (1.0 - silence_frac)))
    syl_lens = np.maximum(160, (n_speech * syl_weights / syl_weights.sum()).astype(int))
    gap_lens = ((n_total - syl_lens.sum()) * gap_weights / gap_weights.sum()).astype(int)

    fricative_idx = set(rng.choice(n_syl, size=3, replace=False).tolist())
    out = np.zeros(n_total)
    pos = 0
    for i in range(n_syl):
        pos += gap_lens[i]
        n = int(syl_lens[i])
        if pos + n > n_total:
            n = n_total - pos
        if n <= 0:
            break
        if i in fricative_idx:
            syl = _fricative_syllable(rng, n)
        else:
            syl = _voiced_syllable(rng, n)
        peak = np.max(np.abs(syl))
        if peak > 0:
            syl = syl / peak * rng.uniform(0.5, 1.0)
        out[pos : pos + n] += syl
        pos += n

    normalized, _ = peak_normalize(Waveform(out), CLEAN_PEAK)
    return normalized


# ---------------------------------------------------------------------------
# Noise synthesis
# ---------------------------------------------------------------------------

def _noise_talkers(rng, n):
    duration_s = n / SAMPLE_RATE
    seeds = rng.integers(0, 2**63 - 1, size=2)
    a = synth_utterance(int(seeds[0]), duration_s).samples
    b = synth_utterance(int(seeds[1]), duration_s).samples
    return a[:n] + b[:n]


def _noise_piano(rng, n):
    out = np.zeros(n)
    t_axis = np.arange(n) / SAMPLE_RATE
    n_notes = max(3, int(n / SAMPLE_RATE * 3))
    semitones = rng.integers(0, 25, size=n_notes)  # two octaves above A3
    onsets = np.sort(rng.uniform(0.0, max(0.05, n / SAMPLE_RATE - 0.3), size=n_notes))
    for onset, semi in zip(onsets, semitones):
        f0 = 220.0 * 2.0 ** (semi / 12.0)
        start = int(onset * SAMPLE_RATE)
        seg_t = t_axis[: n - start]
        tau = rng.uniform(0.3, 1.0)
        tone = np.zeros_like(seg_t)
        for h in range(1, 7):
            fh = h * f0
            if fh >= SAMPLE_RATE / 2:
                break
            tone += (1.0 / h) * np.sin(2 * np.pi * fh * seg_t + rng.uniform(0, 2 * np.pi))
        out[start:] += tone * np.exp(-seg_t / tau) * rng.uniform(0.4, 1.0)
    return out


def _noise_siren(rng, n):
    t = np.arange(n) / SAMPLE_RATE
    freq = 1000.0 + 400.0 * np.sin(2 * np.pi * 0.5 * t + rng.uniform(0, 2 * np.pi))
    phase = 2 * np.pi * np.cumsum(freq) / SAMPLE_RATE
    return np.sin(phase)


def _noise_ssn(rng, n):
    # long-term average spectrum over 10 reference utterances
    nfft = 4096
    psd = np.zeros(nfft // 2 + 1)
    seeds = rng.integers(0, 2**63 - 1, size=10)
    n_frames = 0
    for s in seeds:
        u = synth_utterance(int(s), 3.0).samples
        for start in range(0, u.size - nfft + 1, nfft // 2):
            psd += np.abs(np.fft.rfft(u[start : start + nfft])) ** 2
            n_frames += 1
    psd /= n_frames
    # zero-phase FIR via frequency sampling of the average magnitude
    h = np.fft.irfft(np.sqrt(psd))
    h = np.roll(h, nfft // 2)[nfft // 2 - 512 : nfft // 2 + 513]
    h *= np.hanning(h.size)
    white = rng.standard_normal(n)
    return sps.fftconvolve(white, h, mode="same")


def _noise_car(rng, n):
    b, a = sps.butter(4, 120.0, btype="low", fs=SAMPLE_RATE)
    rumble = sps.lfilter(b, a, rng.standard_normal(n))
    rumble /= max(1e-12, np.max(np.abs(rumble)))
    t = np.arange(n) / SAMPLE_RATE
    engine = np.zeros(n)
    for h in range(1, 9):
        engine += (1.0 / h) * np.sin(2 * np.pi * 30.0 * h * t + rng.uniform(0, 2 * np.pi))
    am = 1.0 + 0.2 * np.sin(2 * np.pi * 0.7 * t + rng.uniform(0, 2 * np.pi))
    return (rumble + 0.35 * engine / np.max(np.abs(engine))) * am


def _noise_babycry(rng, n):
    out = np.zeros(n)
    pos = 0
    while pos < n:
        burst_len = int(rng.uniform(0.4, 1.2) * SAMPLE_RATE)
        gap_len = int(rng.uniform(0.1, 0.5) * SAMPLE_RATE)
        m = min(burst_len, n - pos)
        if m > 16:
            tt = np.arange(m) / SAMPLE_RATE
            f0 = rng.uniform(400.0, 600.0) * (1.0 + 0.15 * np.sin(np.pi * tt / tt[-1]))
            phase = 2 * np.pi * np.cumsum(f0) / SAMPLE_RATE
            cry = np.zeros(m)
            for h in range(1, 8):
                cry += (1.0 / h) * np.sin(h * phase)
            out[pos : pos + m] = cry * _fade_envelope(m, 0.25)
        pos += burst_len + gap_len
    return out


def _noise_helicopter(rng, n):
    rotor_hz = rng.uniform(12.0, 14.0)
    period = int(SAMPLE_RATE / rotor_hz)
    click_len = int(0.005 * SAMPLE_RATE)
    click = rng.standard_normal(click_len) * np.exp(-np.arange(click_len) / (click_len / 4))
    impulses = np.zeros(n)
    for start in range(0, n, period):
        m = min(click_len, n - start)
        impulses[start : start + m] += click[:m]
    b, a = sps.butter(2, [300.0, 3000.0], btype="band", fs=SAMPLE_RATE)
    bed = sps.lfilter(b, a, rng.standard_normal(n))
    return impulses / max(1e-12, np.max(np.abs(impulses))) + 0.3 * bed / max(
        1e-12, np.max(np.abs(bed))
    )


_NOISE_GENERATORS = {
    "talkers": _noise_talkers,
    "piano": _noise_piano,
    "siren": _noise_siren,
    "ssn": _noise_ssn,
    "car": _noise_car,
    "babycry": _noise_babycry,
    "helicopter": _noise_helicopter,
}


def synth_noise(noise_type: str, seed: int, duration_s: float) -> Waveform:
    """Deterministic synthetic noise of the named class, peak 0.9."""
    if noise_type not in _NOISE_GENERATORS:
        raise ValueError(
            f"unknown noise type {noise_type!r}; expected one of {sorted(_NOISE_GENERATORS)}"
        )
    n = int(round(duration_s * SAMPLE_RATE))
    rng = substream(seed, "noise", noise_type)
    raw = _NOISE_GENERATORS[noise_type](rng, n)
    normalized, _ = peak_normalize(Waveform(raw), CLEAN_PEAK)
    return normalized


# ---------------------------------------------------------------------------
# Manifest
# ---------------------------------------------------------------------------

SPLITS = ("train", "validation", "test")


@dataclass
class UtteranceRecord:
    id: str
    split: str
    clean_acm_path: str
    bcm_path: str
    noisy_acm_path: str
    noise_type: str
    snr_db: float


@dataclass
class Manifest:
    records: list[UtteranceRecord]
    metadata: dict = field(default_factory=dict)
    base_dir: Path | None = None

    def split_records(self, split: str) -> list[UtteranceRecord]:
        if split not in SPLITS:
            raise ValueError(f"unknown split {split!r}; expected one of {SPLITS}")
        return [r for r in self.records if r.split == split]

    def resolve(self, rel_path: str) -> Path:
        base = self.base_dir if self.base_dir is not None else Path(".")
        return base / rel_path


def save_manifest(manifest: Manifest, path) -> None:
    """Write the metadata line followed by one JSON record per line."""
    lines = [json.dumps(manifest.metadata, sort_keys=True, separators=(",", ":"))]
    for rec in manifest.records:
        lines.append(json.dumps(asdict(rec), sort_keys=True, separators=(",", ":")))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def load_manifest(path) -> Manifest:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty manifest")
    metadata = json.loads(lines[0])
    records = [UtteranceRecord(**json.loads(ln)) for ln in lines[1:]]
    manifest = Manifest(records=records, metadata=metadata, base_dir=path.parent)
    _check_manifest(manifest)
    return manifest


def _check_manifest(manifest: Manifest) -> None:
    ids = [r.id for r in manifest.records]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise ValueError(f"duplicate record ids in manifest: {dupes[:5]}")
    for rec in manifest.records:
        if rec.split not in SPLITS:
            raise ValueError(f"record {rec.id}: unknown split {rec.split!r}")
        if rec.noise_type not in NOISE_TYPES:
            raise ValueError(f"record {rec.id}: unknown noise type {rec.noise_type!r}")


def validate_manifest_files(manifest: Manifest) -> None:
    """Check referenced files exist and lengths agree within each record."""
    for rec in manifest.records:
        lengths = {}
        for role in ("clean_acm_path", "bcm_path", "noisy_acm_path"):
            p = manifest.resolve(getattr(rec, role))
            if not p.exists():
                raise FileNotFoundError(f"record {rec.id}: missing {role} file {p}")
            lengths[role] = len(read_wav(p))
        if len(set(lengths.values())) != 1:
            raise ValueError(f"record {rec.id}: sample-count mismatch {lengths}")


def _snr_tag(snr_db: float) -> str:
    sign = "m" if snr_db < 0 else "p"
    mag = f"{abs(snr_db):g}".replace(".", "_")
    return f"{sign}{mag}db"


def utterance_seed(seed: int, split: str, index: int) -> int:
    return int(substream(seed, "utt-seed", split, index).integers(0, 2**63 - 1))


def record_noise_seed(seed: int, split: str, index: int, noise_type: str, snr_db: float) -> int:
    tag = f"{split}/{index}/{noise_type}/{snr_db:g}"
    return int(substream(seed, "noise-seed", tag).integers(0, 2**63 - 1))


def materialize_utterance(
    seed: int, split: str, index: int, duration_s: float, channel: BcmChannel
) -> tuple[Waveform, Waveform]:
    """Regenerate one utterance's clean/bone-conducted pair from seeds.

    If zero-phase filtering overshoots |1.0| (possible in principle for a
    signal peaked at 0.9), both signals are scaled down together so every
    written file stays in range.
    """
    clean = synth_utterance(utterance_seed(seed, split, index), duration_s)
    bcm = simulate_bcm(clean, channel)
    peak = float(np.max(np.abs(bcm.samples)))
    if peak > 1.0:
        clean = Waveform(clean.samples / peak)
        bcm = Waveform(bcm.samples / peak)
    return clean, bcm


def materialize_record(
    seed: int,
    split: str,
    index: int,
    noise_type: str,
    snr_db: float,
    duration_s: float,
    channel: BcmChannel,
    clean_bcm: tuple[Waveform, Waveform] | None = None,
):
    """Regenerate the in-memory signals for one corpus record.

    Returns (clean, bcm, noisy, mix_gain, rescale). The mixing gain satisfies
    the target SNR exactly in float64; when the mixture would clip, all three
    signals carry the same joint rescale factor (SNR is unaffected).
    """
    if clean_bcm is None:
        clean_bcm = materialize_utterance(seed, split, index, duration_s, channel)
    clean, bcm = clean_bcm
    nseed = record_noise_seed(seed, split, index, noise_type, snr_db)
    noise = synth_noise(noise_type, nseed, duration_s)
    offset = int(substream(nseed, "offset").integers(0, len(noise)))
    noise = Waveform(np.roll(noise.samples, offset), noise.sample_rate_hz)
    noisy, mix_gain = mix_at_snr(clean, noise, snr_db)

    rescale = 1.0
    peak = float(np.max(np.abs(noisy.samples)))
    if peak > 1.0:
        rescale = 1.0 / peak
        clean = Waveform(clean.samples * rescale)
        bcm = Waveform(bcm.samples * rescale)
        noisy = Waveform(noisy.samples * rescale)
    return clean, bcm, noisy, mix_gain, rescale


def build_manifest(
    out_dir,
    seed: int,
    counts: tuple[int, int, int] = DEFAULT_COUNTS,
    train_snrs: tuple[float, ...] = TRAIN_SNRS_DB,
    test_snrs: tuple[float, ...] = TEST_SNRS_DB,
    *,
    duration_s: float = 3.0,
    bcm_cutoff_hz: float = 1000.0,
    bcm_order: int = 4,
    jobs: int = 1,
) -> Manifest:
    """Generate the paired corpus on disk and return its manifest.

    Each train/validation utterance is mixed with every (train-noise, train-SNR)
    combination; each test utterance with every (test-noise, test-SNR)
    combination. The bone-conduction files are noise-free by construction.
    """
    if any(c < 1 for c in counts):
        raise ValueError(f"split counts must each be >= 1, got {counts}")
    if not train_snrs or not test_snrs:
        raise ValueError("SNR lists must be non-empty")

    out_dir = Path(out_dir)
    for sub in ("clean", "bcm", "noisy", "rescaled"):
        (out_dir / sub).mkdir(parents=True, exist_ok=True)
    channel = design_bcm_channel(bcm_cutoff_hz, bcm_order)

    work = []
    for split, count in zip(SPLITS, counts):
        noises = TEST_NOISES if split == "test" else TRAIN_NOISES
        snrs = test_snrs if split == "test" else train_snrs
        for u in range(count):
            for noise_type in noises:
                for snr_db in snrs:
                    work.append((split, u, noise_type, float(snr_db)))

    def _emit(item) -> UtteranceRecord:
        split, u, noise_type, snr_db = item
        clean, bcm, noisy, _, rescale = materialize_record(
            seed, split, u, noise_type, snr_db, duration_s, channel
        )
        rec_id = f"{split}-{u:04d}-{noise_type}-{_snr_tag(snr_db)}"
        noisy_rel = f"noisy/{rec_id}.wav"
        if rescale == 1.0:
            clean_rel = f"clean/{split}-{u:04d}.wav"
            bcm_rel = f"bcm/{split}-{u:04d}.wav"
        else:
            # clipped mixture: this record gets its own jointly rescaled pair
            clean_rel = f"rescaled/{rec_id}-clean.wav"
            bcm_rel = f"rescaled/{rec_id}-bcm.wav"
        for rel, w in ((clean_rel, clean), (bcm_rel, bcm), (noisy_rel, noisy)):
            write_wav(out_dir / rel, w)
        return UtteranceRecord(
            id=rec_id,
            split=split,
            clean_acm_path=clean_rel,
            bcm_path=bcm_rel,
            noisy_acm_path=noisy_rel,
            noise_type=noise_type,
            snr_db=snr_db,
        )

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_emit, work))
    else:
        records = [_emit(item) for item in work]

    metadata = {
        "kind": "boneair-manifest",
        "version": 1,
        "seed": int(seed),
        "counts": {"train": counts[0], "validation": counts[1], "test": counts[2]},
        "train_snrs_db": list(train_snrs),
        "test_snrs_db": list(test_snrs),
        "train_noises": list(TRAIN_NOISES),
        "test_noises": list(TEST_NOISES),
        "duration_s": duration_s,
        "bcm_cutoff_hz": bcm_cutoff_hz,
        "bcm_order": bcm_order,
    }
    manifest = Manifest(records=records, metadata=metadata, base_dir=out_dir)
    _check_manifest(manifest)
    save_manifest(manifest, out_dir / "manifest.jsonl")
    return manifest
