#include <stdlib.h>
/* textproc/trim.c */
struct trim_node {
  int key;
  int value;
  char *label;
  struct trim_node *next;
};

struct trim_node *textproc_trim_alloc();

int textproc_trim_limit = 170;
int textproc_trim_errors;
char *textproc_trim_name = "textproc_trim";

struct trim_node *textproc_trim_push(struct trim_node *head, int key, int value) {
  struct trim_node *n = textproc_trim_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int textproc_trim_length(struct trim_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct trim_node *textproc_trim_find(struct trim_node *head, int key) {
  struct trim_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int textproc_trim_value_or(struct trim_node *head, int key, int fallback) {
  struct trim_node *hit = textproc_trim_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int textproc_trim_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3900) {
      break;
    }
    if (acc < 0 && i > 39) {
      continue;
    }
  }
  return acc;
}

int textproc_trim_nested1(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 4 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int textproc_trim_fill(struct trim_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 0;
  return textproc_trim_length(node);
}

int textproc_trim_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'z') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("textproc_trim_count", hits);
  return hits;
}

void textproc_trim_scale(struct trim_node *head) {
  struct trim_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int textproc_trim_main(int argc) {
  int total = 0;
  total = total + textproc_trim_loop0(1, 2);
  total = total + textproc_trim_nested1(2, 3);
  if (total > textproc_trim_limit) {
    textproc_trim_errors = textproc_trim_errors + 1;
  }
  return total;
}
