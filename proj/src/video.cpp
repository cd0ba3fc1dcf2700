#include "nlrestore/video.hpp"

#include "nlrestore/pgm.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace nlrestore {

namespace {

// Strict total order on candidates: cost, then |dx|+|dy|, then dy, then dx.
struct Candidate {
  MotionVector v;
  std::int64_t cost = 0;

  bool beats(const Candidate& other) const {
    if (cost != other.cost) return cost < other.cost;
    const int a = std::abs(v.dx) + std::abs(v.dy);
    const int b = std::abs(other.v.dx) + std::abs(other.v.dy);
    if (a != b) return a < b;
    if (v.dy != other.v.dy) return v.dy < other.v.dy;
    return v.dx < other.v.dx;
  }
};

class BlockSearch {
 public:
  BlockSearch(const Image& current, const Image& reference, int x0, int y0, int bw, int bh,
              int range)
      : current_(current), reference_(reference), x0_(x0), y0_(y0), bw_(bw), bh_(bh),
        range_(range) {}

  // Evaluates (caching) and folds the candidate into the running best.
  void consider(MotionVector v, Candidate& best) {
    v.dx = std::clamp(v.dx, -range_, range_);
    v.dy = std::clamp(v.dy, -range_, range_);
    const auto key = std::make_pair(v.dx, v.dy);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const std::int64_t cost = blockSad(current_, reference_, x0_, y0_, bw_, bh_, v.dx, v.dy);
      it = cache_.emplace(key, cost).first;
      ++evaluations_;
    }
    const Candidate cand{v, it->second};
    if (best.cost < 0 || cand.beats(best)) best = cand;
  }

  int evaluations() const { return evaluations_; }

 private:
  const Image& current_;
  const Image& reference_;
  int x0_, y0_, bw_, bh_, range_;
  int evaluations_ = 0;
  std::map<std::pair<int, int>, std::int64_t> cache_;
};

Sample median3(Sample a, Sample b, Sample c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

Sample compensatedRead(const Image& frame, int x, int y, const MotionField& field) {
  const int bx = std::min(x / field.blockSize, field.blocksX - 1);
  const int by = std::min(y / field.blockSize, field.blocksY - 1);
  const MotionVector& v = field.at(bx, by);
  const int rx = std::clamp(x + v.dx, 0, static_cast<int>(frame.cols()) - 1);
  const int ry = std::clamp(y + v.dy, 0, static_cast<int>(frame.rows()) - 1);
  return frame(ry, rx);
}

MotionField identityField(const Image& frame, int blockSize, int searchRange) {
  MotionField field;
  field.blockSize = blockSize;
  field.searchRange = searchRange;
  field.blocksX = static_cast<int>((frame.cols() + blockSize - 1) / blockSize);
  field.blocksY = static_cast<int>((frame.rows() + blockSize - 1) / blockSize);
  const std::size_t n = static_cast<std::size_t>(field.blocksX) *
                        static_cast<std::size_t>(field.blocksY);
  field.vectors.assign(n, MotionVector{});
  field.costs.assign(n, 0);
  field.evaluations.assign(n, 0);
  return field;
}

}  // namespace

std::int64_t blockSad(const Image& current, const Image& reference, int x0, int y0, int bw,
                      int bh, int dx, int dy) {
  const int w = static_cast<int>(reference.cols());
  const int h = static_cast<int>(reference.rows());
  std::int64_t sad = 0;
  for (int y = y0; y < y0 + bh; ++y) {
    const int ry = std::clamp(y + dy, 0, h - 1);
    for (int x = x0; x < x0 + bw; ++x) {
      const int rx = std::clamp(x + dx, 0, w - 1);
      sad += std::abs(static_cast<int>(current(y, x)) - static_cast<int>(reference(ry, rx)));
    }
  }
  return sad;
}

MotionField arpsEstimate(const Image& current, const Image& reference, int blockSize,
                         int searchRange) {
  if (!sameSize(current, reference)) {
    throw std::invalid_argument("arps: dimension mismatch");
  }
  if (blockSize < 1 || searchRange < 1) {
    throw std::invalid_argument("arps: blockSize and searchRange must be >= 1");
  }
  const int w = static_cast<int>(current.cols());
  const int h = static_cast<int>(current.rows());
  MotionField field = identityField(current, blockSize, searchRange);

  for (int by = 0; by < field.blocksY; ++by) {
    for (int bx = 0; bx < field.blocksX; ++bx) {
      const int x0 = bx * blockSize;
      const int y0 = by * blockSize;
      const int bw = std::min(blockSize, w - x0);
      const int bh = std::min(blockSize, h - y0);
      const MotionVector pred = bx > 0 ? field.at(bx - 1, by) : MotionVector{};

      BlockSearch search(current, reference, x0, y0, bw, bh, searchRange);
      Candidate best{MotionVector{}, -1};
      const int arm = std::max({std::abs(pred.dx), std::abs(pred.dy), 1});
      search.consider(MotionVector{0, 0}, best);
      search.consider(MotionVector{arm, 0}, best);
      search.consider(MotionVector{-arm, 0}, best);
      search.consider(MotionVector{0, arm}, best);
      search.consider(MotionVector{0, -arm}, best);
      search.consider(pred, best);

      // Unit diamond around the running best until it stays put.
      for (;;) {
        const MotionVector center = best.v;
        search.consider(MotionVector{center.dx + 1, center.dy}, best);
        search.consider(MotionVector{center.dx - 1, center.dy}, best);
        search.consider(MotionVector{center.dx, center.dy + 1}, best);
        search.consider(MotionVector{center.dx, center.dy - 1}, best);
        if (best.v == center) break;
      }

      const std::size_t i = static_cast<std::size_t>(by * field.blocksX + bx);
      field.vectors[i] = best.v;
      field.costs[i] = best.cost;
      field.evaluations[i] = search.evaluations();
    }
  }
  return field;
}

FrameSequence temporalMedianDenoise(const FrameSequence& seq,
                                    std::span<const PairMotion> motion) {
  if (seq.size() < 3) {
    throw std::invalid_argument("temporal median needs at least three frames");
  }
  if (motion.size() != seq.size() - 2) {
    throw std::invalid_argument("temporal median: one PairMotion per interior frame");
  }
  FrameSequence out(seq.size());
  out.front() = seq.front();
  out.back() = seq.back();
  for (std::size_t t = 1; t + 1 < seq.size(); ++t) {
    const Image& prev = seq[t - 1];
    const Image& cur = seq[t];
    const Image& next = seq[t + 1];
    const PairMotion& pm = motion[t - 1];
    Image frame(cur.rows(), cur.cols());
    for (int y = 0; y < cur.rows(); ++y) {
      for (int x = 0; x < cur.cols(); ++x) {
        const Sample a = compensatedRead(prev, x, y, pm.toPrevious);
        const Sample b = cur(y, x);
        const Sample c = compensatedRead(next, x, y, pm.toNext);
        frame(y, x) = median3(a, b, c);
      }
    }
    out[t] = std::move(frame);
  }
  return out;
}

FrameSequence temporalMedianDenoise(const FrameSequence& seq, bool motionCompensated,
                                    int blockSize, int searchRange) {
  if (seq.size() < 3) {
    throw std::invalid_argument("temporal median needs at least three frames");
  }
  std::vector<PairMotion> motion;
  motion.reserve(seq.size() - 2);
  for (std::size_t t = 1; t + 1 < seq.size(); ++t) {
    if (motionCompensated) {
      motion.push_back(PairMotion{arpsEstimate(seq[t], seq[t - 1], blockSize, searchRange),
                                  arpsEstimate(seq[t], seq[t + 1], blockSize, searchRange)});
    } else {
      motion.push_back(PairMotion{identityField(seq[t], blockSize, searchRange),
                                  identityField(seq[t], blockSize, searchRange)});
    }
  }
  return temporalMedianDenoise(seq, motion);
}

FrameSequence loadFrameDirectory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  FrameSequence seq;
  seq.reserve(paths.size());
  for (const auto& p : paths) seq.push_back(loadPgmFile(p));
  return seq;
}

void saveFrameDirectory(const std::filesystem::path& dir, const FrameSequence& seq) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%04zu.pgm", i + 1);
    savePgmFile(dir / name, seq[i]);
  }
}

std::string motionFieldCsv(const MotionField& field) {
  std::string csv = "block_x,block_y,dx,dy\n";
  for (int by = 0; by < field.blocksY; ++by) {
    for (int bx = 0; bx < field.blocksX; ++bx) {
      const MotionVector& v = field.at(bx, by);
      char row[64];
      std::snprintf(row, sizeof(row), "%d,%d,%d,%d\n", bx, by, v.dx, v.dy);
      csv += row;
    }
  }
  return csv;
}

}  // namespace nlrestore
