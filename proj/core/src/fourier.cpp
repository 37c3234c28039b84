#include "speclab/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace speclab {

namespace {

// FFTW plan creation is not thread-safe; execution on distinct buffers is.
// Plans are cached per (d, n, sign) and reused via fftw_execute_dft.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int d, std::int64_t n, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::tuple<int, std::int64_t, int>(d, n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::size_t total = d == 1 ? static_cast<std::size_t>(n)
                                   : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        fftw_complex* buf = fftw_alloc_complex(total);
        fftw_plan plan = d == 1
            ? fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE)
            : fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), buf, buf, sign,
                               FFTW_ESTIMATE);
        fftw_free(buf);
        plans_.emplace(key, plan);
        return plan;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, std::int64_t, int>, fftw_plan> plans_;
};

} // namespace

GridFunction fourier_transform(const GridFunction& f, FourierDirection dir) {
    const TorusGrid& grid = f.grid();
    const int sign = dir == FourierDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = PlanCache::instance().get(grid.dim(), grid.points_per_axis(), sign);

    GridFunction out(grid);
    std::vector<cdouble> buf(f.values().begin(), f.values().end());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(out.values().data()));

    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.point_count()));
    for (auto& v : out.values()) v *= scale;
    return out;
}

std::int64_t frequency_index(const TorusGrid& grid, std::int64_t j) {
    const std::int64_t n = grid.points_per_axis();
    return j < n / 2 ? j : j - n;
}

double frequency(const TorusGrid& grid, std::int64_t j) {
    return 2.0 * std::numbers::pi / grid.side_length() *
           static_cast<double>(frequency_index(grid, j));
}

double frequency_norm_sq(const TorusGrid& grid, std::int64_t k) {
    if (grid.dim() == 1) {
        double xi = frequency(grid, k);
        return xi * xi;
    }
    const std::int64_t n = grid.points_per_axis();
    double xi0 = frequency(grid, k / n);
    double xi1 = frequency(grid, k % n);
    return xi0 * xi0 + xi1 * xi1;
}

std::vector<double> frequency_norms_sq(const TorusGrid& grid) {
    std::vector<double> out(static_cast<std::size_t>(grid.point_count()));
    for (std::int64_t k = 0; k < grid.point_count(); ++k)
        out[static_cast<std::size_t>(k)] = frequency_norm_sq(grid, k);
    return out;
}

} // namespace speclab
