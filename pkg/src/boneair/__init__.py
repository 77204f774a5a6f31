"""boneair: time-domain multi-modal (bone/air-conducted) speech enhancement.

A small numpy/scipy toolkit that builds a paired clean/bone-conducted/noisy
speech corpus, trains 1-D fully convolutional enhancement networks (single
channel, early fusion, and late fusion), and scores the results with
STOI/ESTOI-style intelligibility metrics.
"""

__version__ = "0.1.0"

from boneair.signal_io import Waveform, read_wav, write_wav, peak_normalize, export_csv

__all__ = [
    "Waveform",
    "read_wav",
    "write_wav",
    "peak_normalize",
    "export_csv",
    "__version__",
]
