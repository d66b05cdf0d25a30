#include <stdlib.h>
/* textproc/escape.c */
struct escape_node {
  int key;
  int value;
  char *label;
  struct escape_node *next;
};

struct escape_node *textproc_escape_alloc();

int textproc_escape_limit = 113;
int textproc_escape_errors;
char *textproc_escape_name = "textproc_escape";

struct escape_node *textproc_escape_push(struct escape_node *head, int key, int value) {
  struct escape_node *n = textproc_escape_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int textproc_escape_length(struct escape_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct escape_node *textproc_escape_find(struct escape_node *head, int key) {
  struct escape_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int textproc_escape_value_or(struct escape_node *head, int key, int fallback) {
  struct escape_node *hit = textproc_escape_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int textproc_escape_branchy0(int x, int y) {
  int result;
  // pick the larger, biased by 34
  if (x > y || x == 34) {
    result = x - y;
  } else if (y > 34 && !x) {
    result = y + 34;
  } else {
    result = 0;
  }
  return result;
}

int textproc_escape_loop1(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 3) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3500) {
      break;
    }
    if (acc < 0 && i > 35) {
      continue;
    }
  }
  return acc;
}

int textproc_escape_nested2(int rows, int cols) {
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

int textproc_escape_fill(struct escape_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 4;
  return textproc_escape_length(node);
}

int textproc_escape_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'x') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("textproc_escape_count", hits);
  return hits;
}

void textproc_escape_scale(struct escape_node *head) {
  struct escape_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int textproc_escape_main(int argc) {
  int total = 0;
  total = total + textproc_escape_branchy0(1, 2);
  total = total + textproc_escape_loop1(2, 3);
  total = total + textproc_escape_nested2(3, 4);
  if (total > textproc_escape_limit) {
    textproc_escape_errors = textproc_escape_errors + 1;
  }
  return total;
}
