#include "nlrestore/restore.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace nlrestore {

namespace {

void validate(const RestoreConfig& cfg) {
  if (cfg.lowThreshold >= cfg.highThreshold) {
    throw std::invalid_argument("restore: low threshold must be below high threshold");
  }
  if (!(cfg.case2Max < cfg.case3Max && cfg.case3Max < 25)) {
    throw std::invalid_argument("restore: need case2Max < case3Max < 25");
  }
}

Sample medianOfWindow(const Window& win) { return exactMedian(win.samples()); }

struct Replacement {
  Sample value;
  ReplacementSource source;
};

// Median first; if the median is itself an extreme value, the mean of the
// uncorrupted window samples. nullopt when the whole window is corrupted.
std::optional<Replacement> medianThenMean(const Window& win, const RestoreConfig& cfg,
                                          ReplacementSource medianSource) {
  const Sample med = medianOfWindow(win);
  if (!isCorrupted(med, cfg)) return Replacement{med, medianSource};
  if (const auto mean = meanUncorrupted(win, cfg)) {
    return Replacement{*mean, ReplacementSource::MeanUncorrupted};
  }
  return std::nullopt;
}

}  // namespace

bool isCorrupted(Sample v, const RestoreConfig& cfg) {
  return v == cfg.lowThreshold || v == cfg.highThreshold;
}

int countCorrupted(const Image& img, int x, int y, const RestoreConfig& cfg) {
  const Window win = extractWindow(img, x, y, 5);
  int n = 0;
  for (const Sample v : win.samples()) n += isCorrupted(v, cfg) ? 1 : 0;
  return n;
}

Sample exactMedian(std::span<const Sample> values) {
  if (values.empty() || values.size() % 2 == 0) {
    throw std::invalid_argument("median requires odd nonzero length");
  }
  if (values.size() <= 25) {  // window-sized inputs stay on the stack
    std::array<Sample, 25> buf;
    std::copy(values.begin(), values.end(), buf.begin());
    const auto mid = buf.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(buf.begin(), mid,
                     buf.begin() + static_cast<std::ptrdiff_t>(values.size()));
    return *mid;
  }
  std::vector<Sample> buf(values.begin(), values.end());
  const auto mid = buf.begin() + static_cast<std::ptrdiff_t>(buf.size() / 2);
  std::nth_element(buf.begin(), mid, buf.end());
  return *mid;
}

Sample shearSortMedian(Window win) {
  const int s = win.size;
  Sample* v = win.values.data();
  for (int r = 0; r < s; ++r) {
    std::sort(v + r * s, v + (r + 1) * s);
  }
  for (int c = 0; c < s; ++c) {
    std::array<Sample, 5> col;
    for (int r = 0; r < s; ++r) col[static_cast<std::size_t>(r)] = v[r * s + c];
    std::sort(col.begin(), col.begin() + s);
    for (int r = 0; r < s; ++r) v[r * s + c] = col[static_cast<std::size_t>(r)];
  }
  std::array<Sample, 5> diag;  // (0, s-1) down to (s-1, 0)
  for (int r = 0; r < s; ++r) diag[static_cast<std::size_t>(r)] = v[r * s + (s - 1 - r)];
  std::sort(diag.begin(), diag.begin() + s);
  for (int r = 0; r < s; ++r) v[r * s + (s - 1 - r)] = diag[static_cast<std::size_t>(r)];
  return win.center();
}

std::optional<Sample> meanUncorrupted(const Window& win, const RestoreConfig& cfg) {
  long sum = 0;
  long count = 0;
  for (const Sample v : win.samples()) {
    if (!isCorrupted(v, cfg)) {
      sum += v;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return static_cast<Sample>((2 * sum + count) / (2 * count));  // round half-up
}

RestoreResult ndbRestore(const Image& img, const RestoreConfig& cfg) {
  validate(cfg);
  const int w = static_cast<int>(img.cols());
  const int h = static_cast<int>(img.rows());
  RestoreResult res{img, {}};
  // Recursive mode reads the buffer being written; otherwise decisions are
  // made against the frozen input.
  const Image frozen = cfg.recursive ? Image() : img;
  const Image& view = cfg.recursive ? res.image : frozen;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!isCorrupted(view(y, x), cfg)) {
        ++res.trace.caseCount[1];
        continue;
      }
      const int n = countCorrupted(view, x, y, cfg);
      const Window win3 = extractWindow(view, x, y, 3);
      std::uint8_t caseId;
      std::optional<Replacement> rep;
      if (n <= cfg.case2Max) {
        caseId = 2;
        rep = medianThenMean(win3, cfg, ReplacementSource::Median3);
      } else if (n <= cfg.case3Max) {
        caseId = 3;
        rep = medianThenMean(extractWindow(view, x, y, 5), cfg, ReplacementSource::Median5);
      } else {
        caseId = 4;
        rep = medianThenMean(win3, cfg, ReplacementSource::Median3);
        if (!rep) {
          rep = medianThenMean(extractWindow(view, x, y, 5), cfg, ReplacementSource::Median5);
        }
      }
      if (!rep) {
        // No clean sample even in the 5x5: reuse the latest restored west
        // neighbor, or mid-gray at the left edge.
        const Sample v = x > 0 ? res.image(y, x - 1) : Sample{128};
        rep = Replacement{v, ReplacementSource::Fallback};
      }
      res.image(y, x) = rep->value;
      ++res.trace.caseCount[caseId];
      ++res.trace.sourceCount[static_cast<int>(rep->source)];
      res.trace.pixels.push_back(PixelTrace{x, y, caseId, rep->source});
    }
  }
  return res;
}

}  // namespace nlrestore
