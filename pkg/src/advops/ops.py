"""The four image-processing families and the fixed 38-operation suite.

Families and parameter grids:

* JPEG compression, quality in {100, 95, ..., 30, 25} (16 operations)
* Gaussian blur, radius in {2, 3, 4, 5} (4 operations; sigma equals the
  radius, kernel truncated at two sigma, unit-sum normalized)
* Clockwise rotation, angle in {1..8} degrees, bilinear, same canvas,
  exposed corners black, not reversed back (8 operations)
* Scaling, factor in {0.75, ..., 0.95, 1.05, ..., 1.25}, bilinear,
  dimensions rounded to the nearest integer, not reversed back (10 ops)

All operations are pure and deterministic. Blur, rotation, and scaling run
fully in floating point; JPEG quantizes to 8 bits at the codec boundary.
The JPEG encoder is pinned to 4:4:4 chroma (no subsampling) so that a
quality-100 roundtrip is near-lossless on small images.
"""

import io
import math
from dataclasses import dataclass

import numpy as np
import PIL
from PIL import Image as PILImage

from .errors import DegenerateOutput, EncodingFailure, ValidationError
from .image import Image, _sample_bilinear, bilinear_resize

JPEG_QUALITIES = (100, 95, 90, 85, 80, 75, 70, 65, 60, 55, 50, 45, 40, 35, 30, 25)
BLUR_RADII = (2, 3, 4, 5)
ROTATION_DEGREES = (1, 2, 3, 4, 5, 6, 7, 8)
SCALE_FACTORS = (0.75, 0.8, 0.85, 0.9, 0.95, 1.05, 1.1, 1.15, 1.2, 1.25)

SUITE_SIZE = 16 + 4 + 8 + 10
SUITE_VERSION = "suite-v1"

# Codec configuration, recorded in manifests for reproducibility.
JPEG_SUBSAMPLING = 0  # 4:4:4
CODEC_ID = f"pillow-{PIL.__version__}-jpeg-444"
# Measured floor for a quality-100 roundtrip on a constant-intensity image.
CODEC_Q100_MIN_PSNR_DB = 40.0
# Probe result: a second encode of already-roundtripped pixels is NOT
# byte-stable with this codec (DCT output re-rounds); recorded once here
# and asserted by the probe test.
CODEC_Q100_BYTE_IDEMPOTENT = False

FAMILIES = ("JpegCompress", "GaussianBlur", "Rotate", "Scale")


@dataclass(frozen=True)
class OperationSpec:
    """One parameterized transform at its position in the canonical suite."""

    family: str
    parameter: float
    index: int  # 1-based position in the canonical suite

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        grid = {
            "JpegCompress": JPEG_QUALITIES,
            "GaussianBlur": BLUR_RADII,
            "Rotate": ROTATION_DEGREES,
            "Scale": SCALE_FACTORS,
        }[self.family]
        if self.parameter not in grid:
            raise ValidationError(
                f"{self.family} parameter {self.parameter} not in canonical grid"
            )
        if not 1 <= self.index <= SUITE_SIZE:
            raise ValidationError(f"index {self.index} outside [1, {SUITE_SIZE}]")

    @property
    def name(self) -> str:
        if self.family == "JpegCompress":
            return f"jpeg{int(self.parameter)}"
        if self.family == "GaussianBlur":
            return f"blur{int(self.parameter)}"
        if self.family == "Rotate":
            return f"rot{int(self.parameter)}"
        return f"scale{self.parameter:g}"


def canonical_suite() -> tuple[OperationSpec, ...]:
    """The fixed 38-operation suite: JPEG, blur, rotation, scaling."""
    specs = []
    for q in JPEG_QUALITIES:
        specs.append(("JpegCompress", float(q)))
    for r in BLUR_RADII:
        specs.append(("GaussianBlur", float(r)))
    for a in ROTATION_DEGREES:
        specs.append(("Rotate", float(a)))
    for s in SCALE_FACTORS:
        specs.append(("Scale", s))
    return tuple(
        OperationSpec(family, param, i + 1) for i, (family, param) in enumerate(specs)
    )


def apply(op: OperationSpec, img: Image) -> Image:
    """Apply one operation to an image, returning a new image."""
    img.check_min_size()
    if op.family == "JpegCompress":
        return jpeg_roundtrip(img, int(op.parameter))
    if op.family == "GaussianBlur":
        return gaussian_blur(img, int(op.parameter))
    if op.family == "Rotate":
        return rotate_clockwise(img, op.parameter)
    return scale(img, op.parameter)


# --- JPEG ---

def encode_jpeg(img: Image, quality: int) -> bytes:
    if not 1 <= quality <= 100:
        raise ValidationError(f"JPEG quality {quality} outside [1, 100]")
    buf = io.BytesIO()
    try:
        PILImage.fromarray(img.to_u8(), "RGB").save(
            buf, format="JPEG", quality=quality, subsampling=JPEG_SUBSAMPLING
        )
    except (OSError, ValueError) as e:
        raise EncodingFailure(f"JPEG encode failed: {e}") from e
    return buf.getvalue()


def jpeg_roundtrip(img: Image, quality: int) -> Image:
    """Encode at the given quality and decode again; dimensions preserved."""
    out = Image.from_bytes(encode_jpeg(img, quality))
    if (out.height, out.width) != (img.height, img.width):
        raise EncodingFailure("codec changed image dimensions")
    return out


def jpeg_roundtrip_q100(img: Image) -> Image:
    """Quality-100 save/reload, mimicking on-disk persistence of attacks."""
    return jpeg_roundtrip(img, 100)


def codec_info() -> dict:
    return {
        "codec": CODEC_ID,
        "subsampling": JPEG_SUBSAMPLING,
        "q100_min_psnr_db": CODEC_Q100_MIN_PSNR_DB,
        "q100_byte_idempotent": CODEC_Q100_BYTE_IDEMPOTENT,
    }


def codec_idempotence_probe(img: Image) -> bool:
    """True if a second q100 encode of roundtripped pixels is byte-stable."""
    first = encode_jpeg(jpeg_roundtrip_q100(img), 100)
    second = encode_jpeg(Image.from_bytes(first), 100)
    return first == second


# --- Gaussian blur ---

def blur_kernel_1d(radius: int) -> np.ndarray:
    """Unit-sum Gaussian taps with sigma = radius, truncated at two sigma."""
    if radius < 1:
        raise ValidationError("blur radius must be >= 1")
    half = 2 * radius
    offsets = np.arange(-half, half + 1, dtype=np.float64)
    k = np.exp(-(offsets**2) / (2.0 * float(radius) ** 2))
    return k / k.sum()


def _convolve_axis(arr: np.ndarray, k: np.ndarray, axis: int) -> np.ndarray:
    """1-D convolution along one axis with edge-replicated padding."""
    half = (len(k) - 1) // 2
    pad = [(0, 0)] * arr.ndim
    pad[axis] = (half, half)
    padded = np.pad(arr, pad, mode="edge")
    out = np.zeros_like(arr)
    sl = [slice(None)] * arr.ndim
    for j, w in enumerate(k):
        sl[axis] = slice(j, j + arr.shape[axis])
        out += w * padded[tuple(sl)]
    return out


def gaussian_blur(img: Image, radius: int) -> Image:
    """Separable Gaussian blur with edge replication; preserves dimensions.

    Edge replication keeps constant-intensity images exactly constant and,
    because clamping is independent per axis, the separable passes equal a
    dense 2-D convolution with the outer-product kernel.
    """
    k = blur_kernel_1d(radius)
    tmp = _convolve_axis(img.pixels, k, axis=1)
    out = _convolve_axis(tmp, k, axis=0)
    return Image(np.clip(out, 0.0, 1.0))


# --- rotation ---

def rotate_clockwise(img: Image, degrees: float) -> Image:
    """Rotate about the image center; same canvas, exposed corners black."""
    h, w = img.height, img.width
    theta = math.radians(degrees)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    cy, cx = (h - 1) / 2.0, (w - 1) / 2.0
    yy, xx = np.meshgrid(
        np.arange(h, dtype=np.float64), np.arange(w, dtype=np.float64), indexing="ij"
    )
    dy, dx = yy - cy, xx - cx
    # Inverse map of a clockwise rotation in (x right, y down) coordinates.
    src_x = cos_t * dx - sin_t * dy + cx
    src_y = sin_t * dx + cos_t * dy + cy
    inside = (src_x >= 0) & (src_x <= w - 1) & (src_y >= 0) & (src_y <= h - 1)
    out = _sample_bilinear(img.pixels, src_y, src_x)
    out[~inside] = 0.0
    return Image(np.clip(out, 0.0, 1.0))


# --- scaling ---

def scale(img: Image, factor: float) -> Image:
    """Resize both dimensions by the factor, rounding to the nearest pixel."""
    if factor <= 0:
        raise ValidationError("scale factor must be positive")
    out_h = int(math.floor(img.height * factor + 0.5))
    out_w = int(math.floor(img.width * factor + 0.5))
    if out_h < 1 or out_w < 1:
        raise DegenerateOutput(
            f"scaling {img.width}x{img.height} by {factor} collapses a dimension"
        )
    return Image(np.clip(bilinear_resize(img.pixels, out_h, out_w), 0.0, 1.0))


# --- named subsets of the canonical suite (1-based indices) ---

SUBSET_IDS = ("jpeg", "blur", "rotation", "scaling", "jpeg+scaling", "all")


def subset_indices(subset_id: str) -> tuple[int, ...]:
    """Map a subset id to 1-based operation indices in the canonical suite."""
    jpeg = tuple(range(1, 17))
    blur = tuple(range(17, 21))
    rotation = tuple(range(21, 29))
    scaling = tuple(range(29, 39))
    table = {
        "jpeg": jpeg,
        "blur": blur,
        "rotation": rotation,
        "scaling": scaling,
        "jpeg+scaling": jpeg + scaling,
        "all": tuple(range(1, SUITE_SIZE + 1)),
    }
    try:
        return table[subset_id]
    except KeyError:
        raise ValidationError(
            f"unknown subset {subset_id!r}; expected one of {SUBSET_IDS}"
        ) from None
