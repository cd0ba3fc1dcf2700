#include "nlrestore/baselines.hpp"
#include "nlrestore/degrade.hpp"
#include "nlrestore/freqdomain.hpp"
#include "nlrestore/metrics.hpp"
#include "nlrestore/pgm.hpp"
#include "nlrestore/restore.hpp"
#include "nlrestore/video.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace nlrestore;

// Exit codes: 0 success, 1 usage error, 2 I/O or data error.
constexpr int kExitData = 2;

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "na"; }

std::string metricsRow(const std::string& label, const std::string& density,
                       const MetricsReport& rep) {
  return label + "," + density + "," + fmt(rep.mse) + "," + fmt(rep.psnrDb) + "," +
         fmt(rep.snriDb) + "," + fmt(rep.ponaPct) + "," + fmt(rep.pospPct) + "\n";
}

constexpr const char* kCsvHeader = "filter,density,mse,psnr_db,snri_db,pona_pct,posp_pct\n";

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct FilterParams {
  int centerWeight = 3;
  int threshold = 20;
  int maxWindow = 7;
  bool recursive = true;
};

Image runFilter(const std::string& id, const Image& img, const FilterParams& p,
                CaseTrace* trace = nullptr) {
  if (id == "ndb") {
    RestoreConfig cfg;
    cfg.recursive = p.recursive;
    auto res = ndbRestore(img, cfg);
    if (trace != nullptr) *trace = std::move(res.trace);
    return std::move(res.image);
  }
  if (id == "smf3") return smf(img, 3);
  if (id == "smf5") return smf(img, 5);
  if (id == "cwmf") return cwmf(img, p.centerWeight);
  if (id == "tsmf") return tsmf(img, p.threshold, p.centerWeight);
  if (id == "amf") return adaptiveMedian(img, p.maxWindow);
  throw std::runtime_error("unknown filter id: " + id);
}

const std::vector<std::string> kFilterIds = {"ndb", "smf3", "smf5", "cwmf", "tsmf", "amf"};

struct DegradeFlags {
  double impulse = 0.0;
  int dropLines = 0;
  int stripLines = 0;
  std::string band;      // "start,width"
  std::string blotches;  // "count[,rmin,rmax]"
  double gaussian = -1.0;

  // impulse density and seed are filled by the caller
  DegradationSpec toSpec() const {
    DegradationSpec spec;
    spec.impulseDensity = impulse;
    spec.dropLines = dropLines;
    spec.stripLines = stripLines;
    if (!band.empty()) {
      int start = 0;
      int width = 0;
      if (std::sscanf(band.c_str(), "%d,%d", &start, &width) != 2) {
        throw std::runtime_error("--band expects start,width");
      }
      spec.band = {start, width};
    }
    if (!blotches.empty()) {
      int count = 0;
      int rmin = 0;
      int rmax = 0;
      const int got = std::sscanf(blotches.c_str(), "%d,%d,%d", &count, &rmin, &rmax);
      if (got == 1) {
        spec.blotches = count;
      } else if (got == 3) {
        spec.blotches = count;
        spec.blotchRadiusMin = rmin;
        spec.blotchRadiusMax = rmax;
      } else {
        throw std::runtime_error("--blotches expects count or count,rmin,rmax");
      }
    }
    if (gaussian >= 0.0) spec.gaussianSigma = gaussian;
    return spec;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--impulse", impulse, "impulse density in [0,1]");
    cmd->add_option("--drop-lines", dropLines, "number of drop lines");
    cmd->add_option("--strip-lines", stripLines, "number of strip lines");
    cmd->add_option("--band", band, "band missing as start,width");
    cmd->add_option("--blotches", blotches, "blotches as count or count,rmin,rmax");
    cmd->add_option("--gaussian", gaussian, "additive Gaussian sigma");
  }
};

void attachFilterParams(CLI::App* cmd, FilterParams& p) {
  cmd->add_option("--center-weight", p.centerWeight, "cwmf/tsmf center weight (odd)");
  cmd->add_option("--threshold", p.threshold, "tsmf threshold");
  cmd->add_option("--max-window", p.maxWindow, "amf maximum window (odd)");
  cmd->add_flag_callback(
      "--non-recursive", [&p] { p.recursive = false; },
      "ndb: decide against the frozen input instead of the working buffer");
}

int mainImpl(int argc, char** argv) {
  CLI::App app{"Grayscale image restoration toolkit: decision-based median/mean "
               "filtering, artifact injection, quality metrics, homomorphic "
               "enhancement, and temporal video denoising"};
  app.require_subcommand(1);

  // --- degrade ---
  auto* cmdDegrade = app.add_subcommand("degrade", "inject seeded artifacts into a PGM");
  std::string inPath;
  std::string outPath;
  std::string maskPath;
  std::uint64_t seed = 0;
  DegradeFlags degradeFlags;
  cmdDegrade->add_option("--in", inPath)->required();
  cmdDegrade->add_option("--out", outPath)->required();
  cmdDegrade->add_option("--seed", seed)->required();
  cmdDegrade->add_option("--mask", maskPath, "write the corruption mask PGM here");
  degradeFlags.attach(cmdDegrade);

  // --- restore ---
  auto* cmdRestore = app.add_subcommand("restore", "run a restoration filter on a PGM");
  std::string filterId;
  std::string tracePath;
  FilterParams filterParams;
  cmdRestore->add_option("--in", inPath)->required();
  cmdRestore->add_option("--out", outPath)->required();
  cmdRestore->add_option("--filter", filterId)->required()->check(CLI::IsMember(kFilterIds));
  cmdRestore->add_option("--trace", tracePath, "write ndb per-case counts CSV here");
  attachFilterParams(cmdRestore, filterParams);

  // --- metrics ---
  auto* cmdMetrics = app.add_subcommand("metrics", "quality metrics for a restoration triple");
  std::string originalPath;
  std::string noisyPath;
  std::string restoredPath;
  std::string label = "na";
  std::string densityText = "na";
  cmdMetrics->add_option("--original", originalPath)->required();
  cmdMetrics->add_option("--noisy", noisyPath)->required();
  cmdMetrics->add_option("--restored", restoredPath)->required();
  cmdMetrics->add_option("--mask", maskPath)->required();
  cmdMetrics->add_option("--out", outPath, "CSV path (default: stdout)");
  cmdMetrics->add_option("--label", label, "value for the filter column");
  cmdMetrics->add_option("--density", densityText, "value for the density column");

  // --- bench ---
  auto* cmdBench = app.add_subcommand(
      "bench", "degrade once per density, run every filter on the same input");
  std::string imagePath;
  std::vector<double> densities;
  std::vector<std::string> filters;
  DegradeFlags benchMix;
  cmdBench->add_option("--image", imagePath)->required();
  cmdBench->add_option("--densities", densities, "impulse densities in (0,1]")
      ->required()
      ->delimiter(',')
      ->check([](const std::string& text) -> std::string {
        const double d = std::atof(text.c_str());
        return d > 0.0 && d <= 1.0 ? "" : "density must lie in (0,1]";
      });
  cmdBench->add_option("--filters", filters)
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(kFilterIds));
  cmdBench->add_option("--seed", seed)->required();
  cmdBench->add_option("--out", outPath)->required();
  benchMix.attach(cmdBench);
  attachFilterParams(cmdBench, filterParams);

  // --- homomorphic ---
  auto* cmdHomomorphic = app.add_subcommand("homomorphic", "log-domain frequency emphasis");
  TransferSpec transferSpec;
  transferSpec.kind = TransferSpec::Kind::HomomorphicEmphasis;
  transferSpec.cutoff = 16.0;
  cmdHomomorphic->add_option("--in", inPath)->required();
  cmdHomomorphic->add_option("--out", outPath)->required();
  cmdHomomorphic->add_option("--gamma-l", transferSpec.gammaLow)->required();
  cmdHomomorphic->add_option("--gamma-h", transferSpec.gammaHigh)->required();
  cmdHomomorphic->add_option("--cutoff", transferSpec.cutoff)->required();
  cmdHomomorphic->add_option("--sharpness", transferSpec.sharpness);

  // --- video-denoise ---
  auto* cmdVideo = app.add_subcommand("video-denoise", "motion-compensated temporal median");
  std::string framesDir;
  std::string outDir;
  std::string motionDir;
  int blockSize = 16;
  int searchRange = 7;
  bool noMotion = false;
  cmdVideo->add_option("--frames", framesDir)->required();
  cmdVideo->add_option("--out", outDir)->required();
  cmdVideo->add_option("--block", blockSize, "macroblock size");
  cmdVideo->add_option("--search", searchRange, "search range");
  cmdVideo->add_flag("--no-motion", noMotion, "skip motion compensation");
  cmdVideo->add_option("--motion-dir", motionDir, "write per-pair motion CSVs here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message / help text
    return code == 0 ? 0 : 1;     // any usage problem maps to exit 1
  }

  try {
    if (cmdDegrade->parsed()) {
      DegradationSpec spec = degradeFlags.toSpec();
      spec.seed = seed;
      const auto result = degrade(loadPgmFile(inPath), spec);
      savePgmFile(outPath, result.image);
      if (!maskPath.empty()) savePgmFile(maskPath, maskToImage(result.mask));
    } else if (cmdRestore->parsed()) {
      if (!tracePath.empty() && filterId != "ndb") {
        throw std::runtime_error("--trace applies to --filter ndb");
      }
      CaseTrace trace;
      const Image restored =
          runFilter(filterId, loadPgmFile(inPath), filterParams,
                    tracePath.empty() ? nullptr : &trace);
      savePgmFile(outPath, restored);
      if (!tracePath.empty()) {
        char row[256];
        std::snprintf(row, sizeof(row),
                      "case1,case2,case3,case4,median3,median5,mean_uncorrupted,fallback\n"
                      "%lld,%lld,%lld,%lld,%lld,%lld,%lld,%lld\n",
                      static_cast<long long>(trace.caseCount[1]),
                      static_cast<long long>(trace.caseCount[2]),
                      static_cast<long long>(trace.caseCount[3]),
                      static_cast<long long>(trace.caseCount[4]),
                      static_cast<long long>(trace.sourceCount[0]),
                      static_cast<long long>(trace.sourceCount[1]),
                      static_cast<long long>(trace.sourceCount[2]),
                      static_cast<long long>(trace.sourceCount[3]));
        writeText(tracePath, row);
      }
    } else if (cmdMetrics->parsed()) {
      const Image original = loadPgmFile(originalPath);
      const Image noisy = loadPgmFile(noisyPath);
      const Image restored = loadPgmFile(restoredPath);
      const Mask mask = maskFromImage(loadPgmFile(maskPath));
      const MetricsReport rep = computeReport(original, noisy, restored, &mask);
      const std::string csv = kCsvHeader + metricsRow(label, densityText, rep);
      if (outPath.empty()) {
        std::cout << csv;
      } else {
        writeText(outPath, csv);
      }
    } else if (cmdBench->parsed()) {
      const Image original = loadPgmFile(imagePath);
      std::string csv = kCsvHeader;
      for (std::size_t di = 0; di < densities.size(); ++di) {
        DegradationSpec spec = benchMix.toSpec();
        spec.impulseDensity = densities[di];
        spec.seed = seed ^ static_cast<std::uint64_t>(di);
        const auto degraded = degrade(original, spec);
        for (const auto& f : filters) {
          const Image restored = runFilter(f, degraded.image, filterParams);
          const MetricsReport rep =
              computeReport(original, degraded.image, restored, &degraded.mask);
          csv += metricsRow(f, fmt(densities[di]), rep);
        }
      }
      writeText(outPath, csv);
    } else if (cmdHomomorphic->parsed()) {
      savePgmFile(outPath, homomorphicEnhance(loadPgmFile(inPath), transferSpec));
    } else if (cmdVideo->parsed()) {
      const FrameSequence frames = loadFrameDirectory(framesDir);
      if (!motionDir.empty() && !noMotion) {
        std::filesystem::create_directories(motionDir);
        for (std::size_t t = 1; t + 1 < frames.size(); ++t) {
          const auto toPrev = arpsEstimate(frames[t], frames[t - 1], blockSize, searchRange);
          const auto toNext = arpsEstimate(frames[t], frames[t + 1], blockSize, searchRange);
          char name[48];
          std::snprintf(name, sizeof(name), "motion_%04zu_prev.csv", t + 1);
          writeText((std::filesystem::path(motionDir) / name).string(), motionFieldCsv(toPrev));
          std::snprintf(name, sizeof(name), "motion_%04zu_next.csv", t + 1);
          writeText((std::filesystem::path(motionDir) / name).string(), motionFieldCsv(toNext));
        }
      }
      saveFrameDirectory(outDir, temporalMedianDenoise(frames, !noMotion, blockSize,
                                                       searchRange));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return mainImpl(argc, argv); }
