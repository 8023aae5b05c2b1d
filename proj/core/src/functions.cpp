#include "sboc/functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>

#include "sboc/minimize.hpp"

namespace sboc {

namespace {

constexpr double kPi = std::numbers::pi;

using Raw = std::function<double(const Eigen::VectorXd&)>;

// --- shared closed-form families -------------------------------------------

double griewank(const Eigen::VectorXd& z) {
    double sum = z.squaredNorm() / 4000.0;
    double product = 1.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        product *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum - product + 1.0;
}

double rastrigin(const Eigen::VectorXd& z) {
    double sum = 10.0 * static_cast<double>(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        sum += z[i] * z[i] - 10.0 * std::cos(2.0 * kPi * z[i]);
    }
    return sum;
}

double perm_beta_half(const Eigen::VectorXd& z) {
    const int d = static_cast<int>(z.size());
    double sum = 0.0;
    for (int i = 1; i <= d; ++i) {
        double term = 0.0;
        for (int j = 1; j <= d; ++j) {
            term += (std::pow(static_cast<double>(j), i) + 0.5) *
                    (std::pow(z[j - 1] / j, i) - 1.0);
        }
        sum += term * term;
    }
    return sum;
}

double alpine(const Eigen::VectorXd& z) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        sum += std::abs(z[i] * std::sin(z[i]) + 0.1 * z[i]);
    }
    return sum;
}

double negative_exponential(const Eigen::VectorXd& z) {
    return -std::exp(-0.5 * z.squaredNorm());
}

double ackley(const Eigen::VectorXd& z) {
    const double n = static_cast<double>(z.size());
    double cosines = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) cosines += std::cos(2.0 * kPi * z[i]);
    return -20.0 * std::exp(-0.2 * std::sqrt(z.squaredNorm() / n)) - std::exp(cosines / n) +
           20.0 + std::numbers::e;
}

double levy(const Eigen::VectorXd& z) {
    const Eigen::Index n = z.size();
    const auto w = [&](Eigen::Index i) { return 1.0 + (z[i] - 1.0) / 4.0; };
    double sum = std::pow(std::sin(kPi * w(0)), 2);
    for (Eigen::Index i = 0; i < n - 1; ++i) {
        sum += std::pow(w(i) - 1.0, 2) * (1.0 + 10.0 * std::pow(std::sin(kPi * w(i) + 1.0), 2));
    }
    sum += std::pow(w(n - 1) - 1.0, 2) * (1.0 + std::pow(std::sin(2.0 * kPi * w(n - 1)), 2));
    return sum;
}

double dixon_price(const Eigen::VectorXd& z) {
    double sum = std::pow(z[0] - 1.0, 2);
    for (Eigen::Index i = 1; i < z.size(); ++i) {
        sum += static_cast<double>(i + 1) * std::pow(2.0 * z[i] * z[i] - z[i - 1], 2);
    }
    return sum;
}

double shekel(const Eigen::VectorXd& z, int terms) {
    static constexpr double a[7][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6},
                                       {3, 7, 3, 7}, {2, 9, 2, 9}, {5, 5, 3, 3}};
    static constexpr double c[7] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3};
    double sum = 0.0;
    for (int i = 0; i < terms; ++i) {
        double d2 = c[i];
        for (int j = 0; j < 4; ++j) d2 += std::pow(z[j] - a[i][j], 2);
        sum -= 1.0 / d2;
    }
    return sum;
}

double hartmann(const Eigen::VectorXd& z, const double (*a)[6], const double (*p)[6], int cols) {
    static constexpr double alpha[4] = {1.0, 1.2, 3.0, 3.2};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        double exponent = 0.0;
        for (int j = 0; j < cols; ++j) exponent += a[i][j] * std::pow(z[j] - p[i][j], 2);
        sum -= alpha[i] * std::exp(-exponent);
    }
    return sum;
}

double hartmann3(const Eigen::VectorXd& z) {
    static constexpr double a[4][6] = {
        {3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
    static constexpr double p[4][6] = {{0.3689, 0.1170, 0.2673},
                                       {0.4699, 0.4387, 0.7470},
                                       {0.1091, 0.8732, 0.5547},
                                       {0.0381, 0.5743, 0.8828}};
    return hartmann(z, a, p, 3);
}

double hartmann6(const Eigen::VectorXd& z) {
    static constexpr double a[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                       {0.05, 10, 17, 0.1, 8, 14},
                                       {3, 3.5, 1.7, 10, 17, 8},
                                       {17, 8, 0.05, 10, 0.1, 14}};
    static constexpr double p[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                       {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                       {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                       {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
    return hartmann(z, a, p, 6);
}

// --- registry assembly ------------------------------------------------------

std::vector<std::pair<double, double>> box(int n, double lo, double hi) {
    return std::vector<std::pair<double, double>>(n, {lo, hi});
}

void add(std::vector<TestFunction>& registry, int id, std::string name,
         std::vector<std::pair<double, double>> bounds,
         std::vector<std::vector<double>> minimizers, double f_listed, bool midpoint_optimal,
         bool unimodal, Raw raw) {
    TestFunction fn;
    fn.id = id;
    fn.name = std::move(name);
    fn.dimension = static_cast<int>(bounds.size());
    fn.lower.resize(fn.dimension);
    fn.upper.resize(fn.dimension);
    for (int d = 0; d < fn.dimension; ++d) {
        fn.lower[d] = bounds[d].first;
        fn.upper[d] = bounds[d].second;
    }
    for (const auto& m : minimizers) {
        fn.minimizers.push_back(
            Eigen::Map<const Eigen::VectorXd>(m.data(), static_cast<Eigen::Index>(m.size())));
    }
    fn.f_listed = f_listed;
    fn.midpoint_optimal = midpoint_optimal;
    fn.unimodal = unimodal;
    fn.raw = std::move(raw);
    registry.push_back(std::move(fn));
}

std::vector<TestFunction> build_registry() {
    std::vector<TestFunction> r;
    r.reserve(52);

    add(r, 1, "six-hump-camel-back", {{-2, 2}, {-1, 1}},
        {{0.5225, 0.1437}, {0.4775, 0.8563}}, -1.0316, false, false, [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return (4.0 - 2.1 * x * x + x * x * x * x / 3.0) * x * x + x * y +
                   (-4.0 + 4.0 * y * y) * y * y;
        });
    add(r, 2, "ackley-3", box(2, -32, 32), {{0.4893, 0.4944}}, -195.629, false, false,
        [](const Eigen::VectorXd& z) {
            return -200.0 * std::exp(-0.02 * std::hypot(z[0], z[1])) +
                   5.0 * std::exp(std::cos(3.0 * z[0]) + std::sin(3.0 * z[1]));
        });
    add(r, 3, "ackley-4", box(2, -5, 5), {{0.3490, 0.4245}}, -4.5901, false, false,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i + 1 < z.size(); ++i) {
                sum += std::exp(-0.2) * std::hypot(z[i], z[i + 1]) +
                       3.0 * (std::cos(2.0 * z[i]) + std::sin(2.0 * z[i + 1]));
            }
            return sum;
        });
    add(r, 4, "beale", box(2, -4.5, 4.5), {{0.8333, 0.5556}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::pow(1.5 - x + x * y, 2) + std::pow(2.25 - x + x * y * y, 2) +
                   std::pow(2.625 - x + x * y * y * y, 2);
        });
    add(r, 5, "branin", {{-5, 10}, {0, 15}},
        {{0.1239, 0.8183}, {0.5428, 0.1517}, {0.9617, 0.1650}}, 0.3979, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            const double b = 5.1 / (4.0 * kPi * kPi), c = 5.0 / kPi, t = 1.0 / (8.0 * kPi);
            return std::pow(y - b * x * x + c * x - 6.0, 2) + 10.0 * (1.0 - t) * std::cos(x) +
                   10.0;
        });
    add(r, 6, "cross-in-tray", box(2, -10, 10),
        {{0.5697, 0.4303}, {0.5697, 0.5697}, {0.4303, 0.5697}, {0.4303, 0.4303}}, -2.0626,
        false, false, [](const Eigen::VectorXd& z) {
            const double inner = std::abs(std::sin(z[0]) * std::sin(z[1]) *
                                          std::exp(std::abs(100.0 - std::hypot(z[0], z[1]) / kPi)));
            return -0.0001 * std::pow(inner + 1.0, 0.1);
        });
    add(r, 7, "easom", box(2, -10, 10), {{0.6571, 0.6571}}, -1.0, false, false,
        [](const Eigen::VectorXd& z) {
            return -std::cos(z[0]) * std::cos(z[1]) *
                   std::exp(-std::pow(z[0] - kPi, 2) - std::pow(z[1] - kPi, 2));
        });
    add(r, 8, "eggholder", box(2, -512, 512), {{1.0, 0.8948}}, -959.641, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return -(y + 47.0) * std::sin(std::sqrt(std::abs(y + x / 2.0 + 47.0))) -
                   x * std::sin(std::sqrt(std::abs(x - (y + 47.0))));
        });
    add(r, 9, "goldstein-price", box(2, -2, 2), {{0.5, 0.25}}, 3.0, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            const double u = 1.0 + std::pow(x + y + 1.0, 2) *
                                       (19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y +
                                        3.0 * y * y);
            const double v = 30.0 + std::pow(2.0 * x - 3.0 * y, 2) *
                                        (18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y -
                                         36.0 * x * y + 27.0 * y * y);
            return u * v;
        });
    add(r, 10, "holder-table", box(2, -10, 10),
        {{0.9028, 0.9832}, {0.9028, 0.0168}, {0.0972, 0.9832}, {0.0972, 0.0168}}, -19.2085,
        false, false, [](const Eigen::VectorXd& z) {
            return -std::abs(std::sin(z[0]) * std::cos(z[1]) *
                             std::exp(std::abs(1.0 - std::hypot(z[0], z[1]) / kPi)));
        });
    add(r, 11, "michalewicz", box(2, 0, kPi), {{0.7002, 0.4997}}, -1.8013, false, false,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                sum -= std::sin(z[i]) *
                       std::pow(std::sin((i + 1) * z[i] * z[i] / kPi), 20);
            }
            return sum;
        });
    add(r, 12, "schwefel", box(2, -500, 500), {{0.9210, 0.9210}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            double sum = 418.9829 * static_cast<double>(z.size());
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                sum -= z[i] * std::sin(std::sqrt(std::abs(z[i])));
            }
            return sum;
        });
    add(r, 13, "shubert", box(2, -5.12, 5.12),
        {{0.3608, 0.4218}, {0.4218, 0.3608}, {0.4218, 0.9744}, {0.9744, 0.4218}}, -186.731,
        false, false, [](const Eigen::VectorXd& z) {
            double s1 = 0.0, s2 = 0.0;
            for (int j = 1; j <= 5; ++j) {
                s1 += j * std::cos((j + 1) * z[0] + j);
                s2 += j * std::cos((j + 1) * z[1] + j);
            }
            return s1 * s2;
        });
    add(r, 14, "styblinski-tang", box(2, -5, 5), {{0.2096, 0.2096}}, -78.332, false, false,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                sum += std::pow(z[i], 4) - 16.0 * z[i] * z[i] + 5.0 * z[i];
            }
            return 0.5 * sum;
        });
    add(r, 15, "mccormick", {{-1.5, 4}, {-3, 4}}, {{0.1732, 0.2075}}, -1.9133, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::sin(x + y) + std::pow(x - y, 2) - 1.5 * x + 2.5 * y + 1.0;
        });
    add(r, 16, "hartmann-3", box(3, 0, 1), {{0.1146, 0.5556, 0.8525}}, -3.8628, false, false,
        hartmann3);
    add(r, 17, "shekel-5", box(4, 0, 10), {{0.4, 0.4, 0.4, 0.4}}, -10.1532, false, false,
        [](const Eigen::VectorXd& z) { return shekel(z, 5); });
    add(r, 18, "shekel-7", box(4, 0, 10), {{0.4, 0.4, 0.4, 0.4}}, -10.4029, false, false,
        [](const Eigen::VectorXd& z) { return shekel(z, 7); });
    add(r, 19, "trid", box(5, -25, 25), {{0.6, 0.66, 0.68, 0.66, 0.6}}, -30.0, false, true,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) sum += std::pow(z[i] - 1.0, 2);
            for (Eigen::Index i = 1; i < z.size(); ++i) sum -= z[i] * z[i - 1];
            return sum;
        });
    add(r, 20, "hartmann-6", box(6, 0, 1),
        {{0.2017, 0.1500, 0.4769, 0.2753, 0.3117, 0.6573}}, -3.0425, false, false, hartmann6);
    add(r, 21, "bukin-6", {{-15, -5}, {-3, 3}}, {{0.5, 0.6667}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            return 100.0 * std::sqrt(std::abs(z[1] - 0.01 * z[0] * z[0])) +
                   0.01 * std::abs(z[0] + 10.0);
        });
    add(r, 22, "griewank-5d", box(5, -600, 600), {{0.5, 0.5, 0.5, 0.5, 0.5}}, 0.0, true, false,
        griewank);
    add(r, 23, "levy", box(6, -10, 10), {{0.55, 0.55, 0.55, 0.55, 0.55, 0.55}}, 0.0, false,
        false, levy);
    add(r, 24, "levy-13", box(2, -10, 10), {{0.55, 0.55}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::pow(std::sin(3.0 * kPi * x), 2) +
                   std::pow(x - 1.0, 2) * (1.0 + std::pow(std::sin(3.0 * kPi * y), 2)) +
                   std::pow(y - 1.0, 2) * (1.0 + std::pow(std::sin(2.0 * kPi * y), 2));
        });
    add(r, 25, "rastrigin-6d", box(6, -5.12, 5.12), {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5}}, 0.0, true,
        false, rastrigin);
    add(r, 26, "perm-5d", box(5, -5, 5), {{0.6, 0.7, 0.8, 0.9, 1.0}}, 0.0, false, false,
        perm_beta_half);
    add(r, 27, "sum-of-squares", box(4, -5.12, 5.12), {{0.5, 0.5, 0.5, 0.5}}, 0.0, true, true,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) sum += (i + 1) * z[i] * z[i];
            return sum;
        });
    add(r, 28, "booth", box(2, -10, 10), {{0.55, 0.65}}, 0.0, false, true,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::pow(x + 2.0 * y - 7.0, 2) + std::pow(2.0 * x + y - 5.0, 2);
        });
    add(r, 29, "rosenbrock", box(3, -2.048, 2.048), {{0.7441, 0.7441, 0.7441}}, 0.0, false,
        true, [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i + 1 < z.size(); ++i) {
                sum += 100.0 * std::pow(z[i + 1] - z[i] * z[i], 2) + std::pow(z[i] - 1.0, 2);
            }
            return sum;
        });
    add(r, 30, "griewank-2d", box(2, -50, 50), {{0.5, 0.5}}, 0.0, true, false, griewank);
    add(r, 31, "rastrigin-2d", box(2, -5.12, 5.12), {{0.5, 0.5}}, 0.0, true, false, rastrigin);
    add(r, 32, "perm-2d", box(2, -2, 2), {{0.75, 1.0}}, 0.0, false, false, perm_beta_half);
    add(r, 33, "perm-3d", box(3, -3, 3), {{0.6667, 0.8333, 1.0}}, 0.0, false, false,
        perm_beta_half);
    add(r, 34, "adjiman", {{-1, 2}, {-1, 1}}, {{1.0, 0.5529}}, -2.0218, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::cos(x) * std::sin(y) - x / (y * y + 1.0);
        });
    add(r, 35, "alpine-2d", box(2, -10, 10), {{0.5, 0.5}}, 0.0, true, false, alpine);
    add(r, 36, "alpine-4d", box(4, -10, 10), {{0.5, 0.5, 0.5, 0.5}}, 0.0, true, false, alpine);
    add(r, 37, "alpine-6d", box(6, -10, 10), {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5}}, 0.0, true, false,
        alpine);
    add(r, 38, "bartels-conn", box(2, -500, 500), {{0.5, 0.5}}, 1.0, true, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::abs(x * x + y * y + x * y) + std::abs(std::sin(x)) +
                   std::abs(std::cos(y));
        });
    add(r, 39, "bird", box(2, -6.284, 6.284), {{0.8740, 0.7509}, {0.3741, 0.2508}}, -106.765,
        false, false, [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return std::sin(x) * std::exp(std::pow(1.0 - std::cos(y), 2)) +
                   std::cos(y) * std::exp(std::pow(1.0 - std::sin(x), 2)) + std::pow(x - y, 2);
        });
    add(r, 40, "colville", box(4, -10, 10), {{0.55, 0.55, 0.55, 0.55}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3];
            return 100.0 * std::pow(x1 * x1 - x2, 2) + std::pow(x1 - 1.0, 2) +
                   std::pow(x3 - 1.0, 2) + 90.0 * std::pow(x3 * x3 - x4, 2) +
                   10.1 * (std::pow(x2 - 1.0, 2) + std::pow(x4 - 1.0, 2)) +
                   19.8 * (x2 - 1.0) * (x4 - 1.0);
        });
    add(r, 41, "dixon-price-2d", box(2, -10, 10), {{0.55, 0.5354}}, 0.0, false, true,
        dixon_price);
    add(r, 42, "dixon-price-4d", box(4, -10, 10), {{0.55, 0.5353, 0.5297, 0.5273}}, 0.0, false,
        true, dixon_price);
    add(r, 43, "exponential-2d", box(2, -1, 1), {{0.5, 0.5}}, -1.0, true, false,
        negative_exponential);
    add(r, 44, "hosaki", {{0, 5}, {0, 6}}, {{0.8, 0.3333}}, -2.3458, false, false,
        [](const Eigen::VectorXd& z) {
            const double x = z[0], y = z[1];
            return (1.0 - 8.0 * x + 7.0 * x * x - 7.0 * x * x * x / 3.0 +
                    x * x * x * x / 4.0) *
                   y * y * std::exp(-y);
        });
    add(r, 45, "miele-cantrell", box(4, -1, 1), {{0.5, 1.0, 1.0, 1.0}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3];
            return std::pow(std::exp(-x1) - x2, 4) + 100.0 * std::pow(x2 - x3, 6) +
                   std::pow(std::tan(x3 - x4), 4) + std::pow(x1, 8);
        });
    add(r, 46, "price-2", box(2, -10, 10), {{0.5, 0.5}}, 0.9, true, false,
        [](const Eigen::VectorXd& z) {
            return 1.0 + std::pow(std::sin(z[0]), 2) + std::pow(std::sin(z[1]), 2) -
                   0.1 * std::exp(-z[0] * z[0] - z[1] * z[1]);
        });
    add(r, 47, "salomon", box(3, -100, 100), {{0.5, 0.5, 0.5}}, 0.0, true, false,
        [](const Eigen::VectorXd& z) {
            const double radius = z.norm();
            return 1.0 - std::cos(2.0 * kPi * radius) + 0.1 * radius;
        });
    add(r, 48, "ackley-6d", box(6, -5, 5), {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5}}, 0.0, true, false,
        ackley);
    add(r, 49, "exponential-6d", box(6, -1, 1), {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5}}, -1.0, true,
        false, negative_exponential);
    add(r, 50, "schwefel-2-4", box(10, 0, 10),
        {{0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1}}, 0.0, false, false,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                sum += std::pow(z[i] - 1.0, 2) + std::pow(z[0] - z[i] * z[i], 2);
            }
            return sum;
        });
    add(r, 51, "wavy", box(10, -kPi, kPi),
        {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}}, 0.0, true, false,
        [](const Eigen::VectorXd& z) {
            double sum = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                sum += std::cos(10.0 * z[i]) * std::exp(-z[i] * z[i] / 2.0);
            }
            return 1.0 - sum / static_cast<double>(z.size());
        });
    add(r, 52, "zakharov", box(10, -5, 5), {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}},
        0.0, true, true, [](const Eigen::VectorXd& z) {
            double weighted = 0.0;
            for (Eigen::Index i = 0; i < z.size(); ++i) weighted += 0.5 * (i + 1) * z[i];
            return z.squaredNorm() + std::pow(weighted, 2) + std::pow(weighted, 4);
        });

    return r;
}

double best_listed_value(const TestFunction& fn) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : fn.minimizers) best = std::min(best, evaluate_normalized(fn, m));
    return best;
}

}  // namespace

const std::vector<TestFunction>& function_registry() {
    static const std::vector<TestFunction> registry = build_registry();
    return registry;
}

const TestFunction* find_function(const std::string& key) {
    const auto& registry = function_registry();
    const bool numeric =
        !key.empty() && std::all_of(key.begin(), key.end(),
                                    [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
        const long id = std::strtol(key.c_str(), nullptr, 10);
        for (const auto& fn : registry) {
            if (fn.id == id) return &fn;
        }
        return nullptr;
    }
    for (const auto& fn : registry) {
        if (fn.name == key) return &fn;
    }
    return nullptr;
}

double evaluate_normalized(const TestFunction& fn, const Eigen::VectorXd& u) {
    return fn.raw(fn.domain().denormalize(u));
}

const std::vector<SelfCheckEntry>& registry_self_check() {
    static const std::vector<SelfCheckEntry> entries = [] {
        std::vector<SelfCheckEntry> out;
        for (const auto& fn : function_registry()) {
            SelfCheckEntry entry;
            entry.id = fn.id;
            entry.name = fn.name;
            entry.listed = fn.f_listed;
            entry.computed = best_listed_value(fn);
            const double tolerance = std::max(1e-3, 1e-3 * std::abs(fn.f_listed));
            entry.passed = true;
            for (const auto& m : fn.minimizers) {
                if (std::abs(evaluate_normalized(fn, m) - fn.f_listed) > tolerance) {
                    entry.passed = false;
                    break;
                }
            }
            out.push_back(std::move(entry));
        }
        return out;
    }();
    return entries;
}

std::vector<SelfCheckEntry> registry_discrepancies() {
    std::vector<SelfCheckEntry> out;
    for (const auto& entry : registry_self_check()) {
        if (!entry.passed) out.push_back(entry);
    }
    return out;
}

double fstar_metric(const TestFunction& fn) {
    const auto& checks = registry_self_check();
    const auto& entry = checks.at(static_cast<std::size_t>(fn.id - 1));
    return entry.passed ? fn.f_listed : entry.computed;
}

double fstar_floor(const TestFunction& fn) {
    static std::vector<std::optional<double>> cache(function_registry().size());
    auto& slot = cache.at(static_cast<std::size_t>(fn.id - 1));
    if (!slot) {
        double lowest = std::min(fn.f_listed, best_listed_value(fn));
        const auto objective = [&fn](const Eigen::VectorXd& u) {
            return evaluate_normalized(fn, u);
        };
        const Eigen::VectorXd lower = Eigen::VectorXd::Zero(fn.dimension);
        const Eigen::VectorXd upper = Eigen::VectorXd::Ones(fn.dimension);
        CompassOptions polish;
        polish.max_evaluations = 4000 * fn.dimension;
        polish.initial_step = 0.01;
        polish.step_tolerance = 1e-9;
        for (const auto& m : fn.minimizers) {
            lowest = std::min(lowest, compass_minimize(objective, lower, upper, m, polish).value);
        }
        slot = lowest - 1e-7 * (1.0 + std::abs(lowest));
    }
    return *slot;
}

}  // namespace sboc
