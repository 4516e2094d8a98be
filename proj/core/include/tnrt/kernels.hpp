#pragma once

#include <vector>

#include "tnrt/tensor.hpp"

namespace tnrt {

// Convolution kernels use the "same" spatial convention throughout: odd kernel,
// pad = (kernel - 1) / 2 on every side, output size = ceil(input / stride).

/// Dense convolution. w has shape (co, ci, k, k); bias (co) or nullptr.
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor* bias, int stride, int threads = 1);

/// Per-channel convolution, channels never mix. w has shape (c, 1, k, k).
Tensor depthwise_conv2d(const Tensor& x, const Tensor& w, const Tensor* bias, int stride,
                        int threads = 1);

/// Flattens (c, h, w) per sample and applies w (out, in, 1, 1) + bias (out).
/// Output shape (n, out, 1, 1).
Tensor fully_connected(const Tensor& x, const Tensor& w, const Tensor* bias, int threads = 1);

Tensor max_pool(const Tensor& x, int kernel, int stride);
Tensor global_avg_pool(const Tensor& x);
Tensor upsample_nearest_2x(const Tensor& x);

/// Output channel j*groups + g reads input channel g*(c/groups) + j.
Tensor channel_shuffle(const Tensor& x, int groups);

/// Channels [begin, end) of x.
Tensor channel_slice(const Tensor& x, int begin, int end);

Tensor concat_channels(const std::vector<const Tensor*>& xs);

Tensor add(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);

/// a (n, c, h, w) + vec (n, c, 1, 1), vec replicated over all spatial sites.
Tensor broadcast_add(const Tensor& a, const Tensor& vec);

Tensor relu(const Tensor& x);
Tensor sigmoid(const Tensor& x);

/// Softmax over the channel axis, independently per (n, h, w) site.
Tensor softmax_channels(const Tensor& x);

namespace detail {
/// Static partition of [0, count) over `threads` workers; deterministic for
/// any thread count as long as iterations are independent.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);
}  // namespace detail

}  // namespace tnrt
