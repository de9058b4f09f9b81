#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <vector>

#include "tsbench/error.hpp"
#include "tsbench/forecasters.hpp"
#include "tsbench/random.hpp"

namespace tsbench {

namespace {

constexpr int kKmeansRestarts = 25;
constexpr int kKmeansMaxIterations = 100;
constexpr int kMaxClusters = 10;
constexpr int kMaxSuffixWindow = 5;

using Point = std::vector<double>;

double squared_distance(const Point& a, const Point& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

struct KMeansRun {
    std::vector<int> labels;
    double wcss = std::numeric_limits<double>::infinity();
};

// Lloyd iterations from a random subset of points. Assignment ties keep the
// current label so identical points do not oscillate between clusters.
KMeansRun kmeans_once(const std::vector<Point>& points, int k, std::mt19937_64& rng) {
    const int n = static_cast<int>(points.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(order[i], order[j]);
    }

    std::vector<Point> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        centroids.push_back(points[order[c]]);
    }

    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (int iter = 0; iter < kKmeansMaxIterations; ++iter) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_dist = squared_distance(points[i], centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double dist = squared_distance(points[i], centroids[c]);
                if (dist < best_dist || (dist == best_dist && c == labels[i])) {
                    best = c;
                    best_dist = dist;
                }
            }
            if (best != labels[i]) {
                labels[i] = best;
                changed = true;
            }
        }

        // re-seat empty clusters with the point farthest from its centroid
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (int label : labels) {
            ++counts[label];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                continue;
            }
            int farthest = -1;
            double farthest_dist = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[labels[i]] <= 1) {
                    continue;
                }
                const double dist = squared_distance(points[i], centroids[labels[i]]);
                if (dist > farthest_dist) {
                    farthest_dist = dist;
                    farthest = i;
                }
            }
            if (farthest >= 0) {
                --counts[labels[farthest]];
                labels[farthest] = c;
                ++counts[c];
                changed = true;
            }
        }

        for (int c = 0; c < k; ++c) {
            std::fill(centroids[c].begin(), centroids[c].end(), 0.0);
        }
        for (int i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < points[i].size(); ++d) {
                centroids[labels[i]][d] += points[i][d];
            }
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                for (double& v : centroids[c]) {
                    v /= counts[c];
                }
            }
        }

        if (!changed) {
            break;
        }
    }

    KMeansRun run;
    run.labels = labels;
    run.wcss = 0.0;
    for (int i = 0; i < n; ++i) {
        run.wcss += squared_distance(points[i], centroids[labels[i]]);
    }
    return run;
}

KMeansRun kmeans(const std::vector<Point>& points, int k, std::mt19937_64& rng) {
    KMeansRun best;
    for (int restart = 0; restart < kKmeansRestarts; ++restart) {
        KMeansRun run = kmeans_once(points, k, rng);
        if (run.wcss < best.wcss) {
            best = std::move(run);
        }
    }
    return best;
}

double mean_silhouette(const std::vector<Point>& points, const std::vector<int>& labels, int k) {
    const int n = static_cast<int>(points.size());
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int label : labels) {
        ++counts[label];
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        if (counts[labels[i]] <= 1) {
            continue; // singleton: silhouette contribution 0
        }
        std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
        for (int j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            sums[labels[j]] += std::sqrt(squared_distance(points[i], points[j]));
        }
        const double a = sums[labels[i]] / (counts[labels[i]] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == labels[i] || counts[c] == 0) {
                continue;
            }
            b = std::min(b, sums[c] / counts[c]);
        }
        const double denom = std::max(a, b);
        if (denom > 0.0 && std::isfinite(b)) {
            total += (b - a) / denom;
        }
    }
    return total / n;
}

class PsfModel final : public FittedModel {
public:
    PsfModel(std::vector<double> predicted_cycle, long offset)
        : predicted_cycle_(std::move(predicted_cycle)), offset_(offset) {}

    std::string_view method_name() const override { return "psf"; }

    std::vector<double> forecast(int horizon) const override {
        if (horizon < 1) {
            throw Error(ErrorCode::invalid_forecast, "forecast horizon must be >= 1");
        }
        const auto m = static_cast<long>(predicted_cycle_.size());
        std::vector<double> out(static_cast<std::size_t>(horizon));
        for (int i = 0; i < horizon; ++i) {
            out[i] = predicted_cycle_[static_cast<std::size_t>((offset_ + i) % m)];
        }
        return out;
    }

    std::unique_ptr<FittedModel> extend(double) const override {
        // cluster assignments are the fitted parameters; the prediction
        // stream just advances past the appended observation
        return std::make_unique<PsfModel>(predicted_cycle_, offset_ + 1);
    }

private:
    std::vector<double> predicted_cycle_;
    long offset_;
};

std::unique_ptr<FittedModel> fit_psf(const TimeSeries& train, std::uint64_t seed) {
    const int m = train.cycle;
    const int len = train.length();
    if (len < 3 * m) {
        throw Error(ErrorCode::series_too_short,
                    "psf needs at least three full cycles (" + std::to_string(3 * m) +
                        " values), got " + std::to_string(len));
    }

    // keep trailing whole cycles
    const int usable = len - len % m;
    const std::span<const double> window(train.values.data() + (len - usable),
                                         static_cast<std::size_t>(usable));
    auto [normalized, scale] = minmax_normalize(window);

    const int cycle_count = usable / m;
    std::vector<Point> cycles(static_cast<std::size_t>(cycle_count));
    for (int c = 0; c < cycle_count; ++c) {
        cycles[c].assign(normalized.begin() + static_cast<std::ptrdiff_t>(c) * m,
                         normalized.begin() + static_cast<std::ptrdiff_t>(c + 1) * m);
    }

    std::mt19937_64 rng(seed);
    const int k_max = std::min(kMaxClusters, cycle_count - 1);
    std::vector<int> labels;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int k = 2; k <= k_max; ++k) {
        KMeansRun run = kmeans(cycles, k, rng);
        const double score = mean_silhouette(cycles, run.labels, k);
        if (score > best_score) {
            best_score = score;
            labels = std::move(run.labels);
        }
    }

    // match the trailing label suffix against history, longest window first
    std::vector<const Point*> followers;
    for (int w = std::min(kMaxSuffixWindow, cycle_count - 1); w >= 1 && followers.empty(); --w) {
        for (int j = w - 1; j <= cycle_count - 2; ++j) {
            bool match = true;
            for (int offset = 0; offset < w; ++offset) {
                if (labels[j - offset] != labels[cycle_count - 1 - offset]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                followers.push_back(&cycles[j + 1]);
            }
        }
    }

    Point predicted(static_cast<std::size_t>(m), 0.0);
    if (followers.empty()) {
        // no recurring suffix: fall back to the global cycle mean
        for (const Point& cycle : cycles) {
            for (int i = 0; i < m; ++i) {
                predicted[i] += cycle[i];
            }
        }
        for (double& v : predicted) {
            v /= cycle_count;
        }
    } else {
        for (const Point* cycle : followers) {
            for (int i = 0; i < m; ++i) {
                predicted[i] += (*cycle)[i];
            }
        }
        for (double& v : predicted) {
            v /= static_cast<double>(followers.size());
        }
    }

    return std::make_unique<PsfModel>(minmax_denormalize(predicted, scale), 0);
}

} // namespace

ForecasterSpec psf_forecaster(std::uint64_t kmeans_seed) {
    ForecasterSpec spec;
    spec.name = "psf";
    spec.display_name = "psf";
    spec.fit = [kmeans_seed](const TimeSeries& train) {
        return fit_psf(train, kmeans_seed);
    };
    return spec;
}

} // namespace tsbench
