#include "homlex/codes.hpp"

#include <algorithm>

#include "homlex/errors.hpp"

namespace homlex {

namespace {

std::vector<std::uint8_t> bits_from_display(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    // display is the reverse of construction order
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (*it == '0')
            bits.push_back(0);
        else if (*it == '1')
            bits.push_back(1);
        else
            throw ParseError("code strings use only '0'/'1', got '" +
                             std::string{s} + "'");
    }
    return bits;
}

std::string bits_to_display(const std::vector<std::uint8_t>& bits) {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        s[bits.size() - 1 - i] = bits[i] ? '1' : '0';
    return s;
}

} // namespace

std::int64_t ThresholdCode::edge_count() const {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) m += static_cast<std::int64_t>(i) + 1;
    return m;
}

ThresholdCode ThresholdCode::from_display(std::string_view s) {
    return ThresholdCode{bits_from_display(s)};
}

std::string ThresholdCode::display() const { return bits_to_display(bits); }

std::int64_t LoopThresholdCode::edge_count() const {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) m += static_cast<std::int64_t>(i);
    return m;
}

int LoopThresholdCode::loop_count() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

LoopThresholdCode LoopThresholdCode::from_display(std::string_view s) {
    return LoopThresholdCode{bits_from_display(s)};
}

std::string LoopThresholdCode::display() const { return bits_to_display(bits); }

Graph decode_threshold(const ThresholdCode& code) {
    const int n = code.order();
    Graph g(n);
    for (int i = 1; i < n; ++i)
        if (code.bits[i - 1])
            for (int t = 0; t < i; ++t) g.add_edge(t, i);
    return g;
}

Graph decode_loop_threshold(const LoopThresholdCode& code) {
    const int n = code.order();
    if (n == 0)
        throw ParseError("loop-threshold code needs at least one vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        if (code.bits[i]) {
            g.add_loop(i);
            for (int t = 0; t < i; ++t) g.add_edge(t, i);
        }
    return g;
}

ThresholdCode encode_threshold(const Graph& g) {
    if (!g.loop_free())
        throw NotThresholdError("threshold graphs are loop-free");
    const int n = g.order();
    std::vector<bool> removed(n, false);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    // Peel the last-constructed vertex: in a threshold graph it is either
    // dominating or isolated in what remains. Any choice among equals gives
    // the same bit, so the recovered sequence is canonical.
    std::vector<std::uint8_t> reversed;
    int remaining = n;
    while (remaining > 1) {
        int pick = -1;
        std::uint8_t bit = 0;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (removed[v]) continue;
            if (deg[v] == 0) {
                pick = v;
                bit = 0;
            } else if (deg[v] == remaining - 1) {
                pick = v;
                bit = 1;
            }
        }
        if (pick < 0)
            throw NotThresholdError(
                "no dominating or isolated vertex at a peeling step");
        removed[pick] = true;
        --remaining;
        g.neighbors(pick).for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
        reversed.push_back(bit);
    }
    std::reverse(reversed.begin(), reversed.end());
    return ThresholdCode{std::move(reversed)};
}

Graph make_h_ind() { return decode_loop_threshold(LoopThresholdCode::from_display("10")); }

Graph make_j() { return decode_loop_threshold(LoopThresholdCode::from_display("010")); }

} // namespace homlex
