#ifndef KGV_TESTS_FUZZ_ELEMENTS_HPP
#define KGV_TESTS_FUZZ_ELEMENTS_HPP

#include <kgv/kpalg.hpp>

#include <random>

// Seeded random KP elements for property tests: a few terms, path degrees
// bounded in total, small rational coefficients.
namespace fuzz {

class ElementGen {
  public:
    ElementGen(kgv::KGraphPtr graph, std::uint64_t seed, int maxDegreeTotal = 2)
        : graph_(std::move(graph)), rng_(seed), maxDeg_(maxDegreeTotal) {}

    kgv::MultiDegree randomDegree() {
        kgv::MultiDegree d = graph_->zeroDegree();
        int total = static_cast<int>(rng_() % static_cast<unsigned>(maxDeg_ + 1));
        for (int i = 0; i < total; ++i) d[rng_() % d.size()] += 1;
        return d;
    }

    kgv::KPMonomial randomMonomial() {
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto mus = graph_->pathsOfDegree(randomDegree());
            if (mus.empty()) continue;
            const kgv::Path& mu = mus[rng_() % mus.size()];
            std::vector<kgv::Path> nus;
            for (const auto& nu : graph_->pathsOfDegree(randomDegree()))
                if (nu.source == mu.source) nus.push_back(nu);
            if (nus.empty()) return kgv::KPMonomial{mu, graph_->vertexPath(mu.source)};
            return kgv::KPMonomial{mu, nus[rng_() % nus.size()]};
        }
        kgv::Path v = graph_->vertexPath(0);
        return kgv::KPMonomial{v, v};
    }

    kgv::Rational randomCoeff() {
        static const int nums[] = {1, -1, 2, -2, 3, 1, -1, 5};
        static const int dens[] = {1, 1, 1, 2, 2, 3, 1, 1};
        auto i = rng_() % 8;
        return kgv::rational_of(nums[i], dens[i]);
    }

    kgv::KPElement randomElement(int maxTerms = 3) {
        kgv::KPElement x(graph_);
        int n = 1 + static_cast<int>(rng_() % static_cast<unsigned>(maxTerms));
        for (int i = 0; i < n; ++i) x.add(randomMonomial(), randomCoeff());
        return x;
    }

  private:
    kgv::KGraphPtr graph_;
    std::mt19937_64 rng_;
    int maxDeg_;
};

}  // namespace fuzz

#endif
