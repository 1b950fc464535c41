#include "deltacup/cochain.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace deltacup {

namespace {

Rational sign_of(int j) { return j % 2 ? Rational(-1) : Rational(1); }

[[noreturn]] void bad_spec(std::string_view spec, const char* why) {
    throw std::invalid_argument("make_test_cocycle: " + std::string(why) + " in '" +
                                std::string(spec) + "'");
}

// Enumerates all tuples of `k` reduced words (identity included) with total
// length <= budget, in entry-wise recursive order.
template <class F>
void for_each_full_tuple(const GroupCtx& ctx, int k, int budget, Tuple& scratch, F&& f) {
    if (k == 0) {
        f(const_cast<const Tuple&>(scratch));
        return;
    }
    for_each_reduced(ctx, budget, [&](const Word& g) {
        scratch.push_back(g);
        for_each_full_tuple(ctx, k - 1, budget - g.length(), scratch, f);
        scratch.pop_back();
    });
}

} // namespace

Rational Cochain::operator()(const Tuple& t) const {
    if (!eval_fn) throw std::logic_error("Cochain: evaluating an empty cochain");
    if (static_cast<int>(t.size()) != degree)
        throw std::logic_error("Cochain: arity mismatch (degree " + std::to_string(degree) +
                               ", tuple size " + std::to_string(t.size()) + ")");
    if (domain == Domain::aligned)
        for (const Word& g : t)
            if (g.is_identity()) return Rational(0);
    return eval_fn(t);
}

Cochain make_zero_cochain(int degree, Cochain::Domain domain) {
    if (degree < 0) throw std::invalid_argument("make_zero_cochain: degree must be >= 0");
    return Cochain{degree, domain, [](const Tuple&) { return Rational(0); }, Rational(0)};
}

Cochain make_constant_cochain(const Rational& value, Cochain::Domain domain) {
    return Cochain{0, domain, [value](const Tuple&) { return value; }, rational_abs(value)};
}

Cochain make_letter_supported_cochain(const std::vector<std::pair<Letter, Rational>>& weights,
                                      Cochain::Domain domain) {
    Rational bound{0};
    for (const auto& [letter, value] : weights) bound = std::max(bound, rational_abs(value));
    return Cochain{1, domain,
                   [weights](const Tuple& t) {
                       if (t[0].length() != 1) return Rational(0);
                       for (const auto& [letter, value] : weights)
                           if (t[0].letters[0] == letter) return value;
                       return Rational(0);
                   },
                   bound};
}

Cochain coboundary(const Cochain& f) {
    const int n = f.degree;
    Cochain out;
    out.degree = n + 1;
    out.domain = f.domain;
    out.eval_fn = [f, n](const Tuple& t) {
        Rational acc = f(Tuple(t.begin() + 1, t.end()));
        Tuple merged;
        merged.reserve(n);
        for (int j = 1; j <= n; ++j) {
            merged.assign(t.begin(), t.begin() + (j - 1));
            merged.push_back(multiply(t[j - 1], t[j]));
            merged.insert(merged.end(), t.begin() + j + 1, t.end());
            acc += sign_of(j) * f(merged);
        }
        acc += sign_of(n + 1) * f(Tuple(t.begin(), t.end() - 1));
        return acc;
    };
    if (f.bound_hint) out.bound_hint = Rational(n + 2) * *f.bound_hint;
    return out;
}

Cochain cup(const Cochain& f, const Cochain& g) {
    if (f.domain != g.domain)
        throw std::invalid_argument("cup: cochains live on different domains");
    Cochain out;
    out.degree = f.degree + g.degree;
    out.domain = f.domain;
    const int n = f.degree;
    out.eval_fn = [f, g, n](const Tuple& t) {
        Rational left = f(Tuple(t.begin(), t.begin() + n));
        if (left == 0) return Rational(0);
        return left * g(Tuple(t.begin() + n, t.end()));
    };
    if (f.bound_hint && g.bound_hint) out.bound_hint = *f.bound_hint * *g.bound_hint;
    return out;
}

Cochain restrict_cochain(const Cochain& f) {
    if (f.domain != Cochain::Domain::full)
        throw std::invalid_argument("restrict_cochain: input must be a full-domain cochain");
    Cochain out = f;
    out.domain = Cochain::Domain::aligned;
    return out;
}

Cochain alternate(const Cochain& f) {
    if (f.domain != Cochain::Domain::aligned)
        throw std::invalid_argument("alternate: input must be an aligned cochain");
    const int n = f.degree;
    const Rational sign = (n + 1) / 2 % 2 ? Rational(-1) : Rational(1);
    Cochain out;
    out.degree = n;
    out.domain = Cochain::Domain::aligned;
    out.eval_fn = [f, sign](const Tuple& t) {
        Tuple flipped;
        flipped.reserve(t.size());
        for (auto it = t.rbegin(); it != t.rend(); ++it) flipped.push_back(invert(*it));
        return (f(t) + sign * f(flipped)) / 2;
    };
    out.bound_hint = f.bound_hint;
    return out;
}

SupNormResult sup_norm(const Cochain& f, const GroupCtx& ctx, const EvalBudget& budget) {
    if (budget.degree != f.degree)
        throw std::invalid_argument("sup_norm: budget degree does not match the cochain");
    SupNormResult result;
    auto consider = [&](const Tuple& t) {
        ++result.tuples_scanned;
        Rational v = rational_abs(f(t));
        if (v > result.value) {
            result.value = v;
            result.witness = t;
        }
    };
    if (f.degree == 0) {
        consider(Tuple{});
    } else if (f.domain == Cochain::Domain::aligned) {
        for_each_aligned(ctx, f.degree, budget.max_total_len,
                         [&](const AlignedTuple& t) { consider(t.entries); });
    } else {
        Tuple scratch;
        for_each_full_tuple(ctx, f.degree, budget.max_total_len, scratch, consider);
    }
    return result;
}

CocycleCheck is_cocycle(const Cochain& f, const GroupCtx& ctx, int max_total_len) {
    if (f.domain != Cochain::Domain::aligned)
        throw std::invalid_argument("is_cocycle: input must be an aligned cochain");
    Cochain df = coboundary(f);
    CocycleCheck check;
    bool done = false;
    for_each_aligned(ctx, f.degree + 1, max_total_len, [&](const AlignedTuple& t) {
        if (done) return;
        ++check.tuples_checked;
        Rational v = df(t.entries);
        if (v != 0) {
            check.pass = false;
            check.witness = t.entries;
            check.residual = v;
            done = true;
        }
    });
    return check;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::vector<std::int16_t> encode_tuple(const Tuple& t) {
    std::vector<std::int16_t> units;
    units.push_back(static_cast<std::int16_t>(t.size()));
    for (const Word& g : t) {
        units.push_back(static_cast<std::int16_t>(g.length()));
        for (Letter l : g.letters)
            units.push_back(static_cast<std::int16_t>(l.sign() * l.gen()));
    }
    return units;
}

Rational pseudorandom_value(const Tuple& t, std::uint64_t seed) {
    static const Rational table[5] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                      Rational(1)};
    std::uint64_t state = mix64(seed);
    for (std::int16_t unit : encode_tuple(t))
        state = mix64(state ^ static_cast<std::uint16_t>(unit));
    return table[state % 5];
}

Cochain make_pseudorandom_cochain(int degree, std::uint64_t seed) {
    if (degree < 0) throw std::invalid_argument("make_pseudorandom_cochain: degree must be >= 0");
    return Cochain{degree, Cochain::Domain::aligned,
                   [seed](const Tuple& t) { return pseudorandom_value(t, seed); }, Rational(1)};
}

namespace {

// Parses "<int>" out of a spec field.
long long parse_spec_int(std::string_view spec, std::string_view field) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        bad_spec(spec, "malformed integer field");
    return value;
}

} // namespace

Cochain make_test_cocycle(std::string_view spec, const GroupCtx& ctx) {
    if (spec.substr(0, 5) == "zero:") {
        std::string_view rest = spec.substr(5);
        if (rest.substr(0, 2) != "k=") bad_spec(spec, "expected k=<degree>");
        long long k = parse_spec_int(spec, rest.substr(2));
        if (k < 1) bad_spec(spec, "degree must be >= 1");
        return make_zero_cochain(static_cast<int>(k), Cochain::Domain::aligned);
    }
    if (spec.substr(0, 8) == "cobound:") {
        std::string_view rest = spec.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos || rest.substr(0, 2) != "k=" ||
            rest.substr(colon + 1, 5) != "seed=")
            bad_spec(spec, "expected k=<degree>:seed=<seed>");
        long long k = parse_spec_int(spec, rest.substr(2, colon - 2));
        long long seed = parse_spec_int(spec, rest.substr(colon + 6));
        if (k < 1) bad_spec(spec, "degree must be >= 1");
        return coboundary(
            make_pseudorandom_cochain(static_cast<int>(k) - 1, static_cast<std::uint64_t>(seed)));
    }
    if (spec.substr(0, 10) == "qmcobound:") {
        std::string_view rest = spec.substr(10);
        if (rest.substr(0, 2) != "w=") bad_spec(spec, "expected w=<word>");
        Word w = parse_word(rest.substr(2), ctx);
        if (w.is_identity()) bad_spec(spec, "w must be non-identity");
        Cochain dphi;
        dphi.degree = 2;
        dphi.domain = Cochain::Domain::full;
        dphi.eval_fn = [w](const Tuple& t) {
            auto phi = [&](const Word& g) {
                return Rational(count_occurrences(w, g, OccMode::big));
            };
            return phi(t[1]) - phi(multiply(t[0], t[1])) + phi(t[0]);
        };
        return restrict_cochain(dphi);
    }
    if (spec.substr(0, 4) == "cup:") {
        std::string_view rest = spec.substr(4);
        auto plus = rest.rfind('+');
        if (plus == std::string_view::npos) bad_spec(spec, "expected <specA>+<specB>");
        return cup(make_test_cocycle(rest.substr(0, plus), ctx),
                   make_test_cocycle(rest.substr(plus + 1), ctx));
    }
    bad_spec(spec, "unknown cocycle kind");
}

} // namespace deltacup
