#include "syz/koszul.hpp"

#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "syz/error.hpp"
#include "syz/exterior.hpp"

namespace syz {

namespace {

std::string cell_name(std::size_t p, int q) {
  return "K_{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

// Throws RangeError unless K_{p,q} can be formed from the window.
void require_cell(const GradedModuleTable& m, std::size_t p, int q) {
  if (q < m.q_min()) {
    throw RangeError("cannot compute " + cell_name(p, q) + ": degree " + std::to_string(q) +
                     " is below the module window [" + std::to_string(m.q_min()) + ", " +
                     std::to_string(m.q_max()) + "]");
  }
  if (q + 1 > m.q_max()) {
    throw RangeError("cannot compute " + cell_name(p, q) + ": degree " + std::to_string(q + 1) +
                     " is outside the module window [" + std::to_string(m.q_min()) + ", " +
                     std::to_string(m.q_max()) + "]");
  }
}

// rank of d_{p,q}, with the convention that a source below the window is zero
std::size_t differential_rank(const GradedModuleTable& m, std::size_t p, int q) {
  if (q < m.q_min()) return 0;
  return rank(koszul_differential(m, p, q));
}

std::size_t differential_cols(const GradedModuleTable& m, std::size_t p, int q) {
  return binomial(m.n(), p) * m.dim(q);
}

}  // namespace

RationalMatrix koszul_differential(const GradedModuleTable& m, std::size_t p, int q) {
  // mult() throws the range error naming the missing degree
  if (!m.in_window(q) || !m.in_window(q + 1)) (void)m.mult(q, 0);

  const std::size_t n = m.n();
  const std::size_t src_dim = m.dim(q);
  const std::size_t dst_dim = m.dim(q + 1);
  const std::size_t cols = binomial(n, p) * src_dim;
  if (p == 0) return RationalMatrix(0, cols);

  const ExteriorIndex source(n, p);
  const ExteriorIndex target(n, p - 1);
  const std::size_t rows = target.size() * dst_dim;

  std::vector<Triplet> t;
  for (std::size_t s = 0; s < source.size(); ++s) {
    const Subset& subset = source.subset(s);
    std::uint64_t mask = 0;
    for (std::size_t v : subset) mask |= std::uint64_t{1} << v;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const std::size_t var = subset[i];
      const std::size_t tgt = target.index_of_mask(mask & ~(std::uint64_t{1} << var));
      const bool negative = (i % 2) == 1;  // (-1)^{i+1} with 1-based i
      const RationalMatrix& act = m.mult(q, var);
      for (std::size_t r = 0; r < act.rows(); ++r) {
        for (const auto& e : act.row(r)) {
          t.push_back({tgt * dst_dim + r, s * src_dim + e.col, negative ? -e.value : e.value});
        }
      }
    }
  }
  return RationalMatrix::from_triplets(rows, cols, std::move(t));
}

std::size_t koszul_cohomology_dim(const GradedModuleTable& m, std::size_t p, int q) {
  require_cell(m, p, q);
  const std::size_t kernel = differential_cols(m, p, q) - differential_rank(m, p, q);
  return kernel - differential_rank(m, p + 1, q - 1);
}

BettiTable betti_table(const GradedModuleTable& m, std::size_t p_max, int q_lo, int q_hi,
                       unsigned threads) {
  if (q_hi < q_lo) throw RangeError("empty degree range for Betti table");
  for (int q = q_lo; q <= q_hi; ++q) require_cell(m, 0, q);

  // each differential rank is needed by up to two cells
  std::map<std::pair<std::size_t, int>, std::size_t> ranks;
  for (int q = q_lo; q <= q_hi; ++q) {
    for (std::size_t p = 0; p <= p_max; ++p) {
      ranks.emplace(std::make_pair(p, q), 0);
      ranks.emplace(std::make_pair(p + 1, q - 1), 0);
    }
  }
  std::vector<std::pair<const std::pair<std::size_t, int>, std::size_t>*> jobs;
  for (auto& kv : ranks) jobs.push_back(&kv);

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, jobs.size()));
  if (workers == 1) {
    for (auto* job : jobs) job->second = differential_rank(m, job->first.first, job->first.second);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = next++; k < jobs.size(); k = next++) {
            jobs[k]->second = differential_rank(m, jobs[k]->first.first, jobs[k]->first.second);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  BettiTable table(p_max, q_lo, q_hi);
  for (int q = q_lo; q <= q_hi; ++q) {
    for (std::size_t p = 0; p <= p_max; ++p) {
      const std::size_t kernel = differential_cols(m, p, q) - ranks.at({p, q});
      table.set(p, q, kernel - ranks.at({p + 1, q - 1}));
    }
  }
  return table;
}

NpCheck check_np(const GradedModuleTable& m, int p, int q_bound) {
  NpCheck result;
  if (p < 0) return result;
  if (q_bound < 2) {
    throw PreconditionError("q_bound must be at least 2, got " + std::to_string(q_bound));
  }
  for (int i = 0; i <= p; ++i) {
    for (int q = 2; q <= q_bound; ++q) require_cell(m, static_cast<std::size_t>(i), q);
  }
  for (int i = 0; i <= p; ++i) {
    for (int q = 2; q <= q_bound; ++q) {
      const std::size_t d = koszul_cohomology_dim(m, static_cast<std::size_t>(i), q);
      if (d != 0) {
        result.holds = false;
        result.witness = std::make_pair(static_cast<std::size_t>(i), q);
        result.witness_dim = d;
        return result;
      }
    }
  }
  return result;
}

SplittingCheck splitting_check(const GradedModuleTable& m, std::size_t u, std::size_t p, int q) {
  require_cell(m, p, q);
  SplittingCheck out;
  out.extended_dim = koszul_cohomology_dim(extend_by_annihilator(m, u), p, q);
  for (std::size_t i = 0; i <= p; ++i) {
    out.split_sum += binomial(u, p - i) * koszul_cohomology_dim(m, i, q);
  }
  out.equal = out.extended_dim == out.split_sum;
  return out;
}

}  // namespace syz
