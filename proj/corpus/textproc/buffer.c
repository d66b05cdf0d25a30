#include <stdlib.h>
/* textproc/buffer.c */
struct buffer_node {
  int key;
  int value;
  char *label;
  struct buffer_node *next;
};

struct buffer_node *textproc_buffer_alloc();

int textproc_buffer_limit = 211;
int textproc_buffer_errors;
char *textproc_buffer_name = "textproc_buffer";

struct buffer_node *textproc_buffer_push(struct buffer_node *head, int key, int value) {
  struct buffer_node *n = textproc_buffer_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int textproc_buffer_length(struct buffer_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct buffer_node *textproc_buffer_find(struct buffer_node *head, int key) {
  struct buffer_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int textproc_buffer_value_or(struct buffer_node *head, int key, int fallback) {
  struct buffer_node *hit = textproc_buffer_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int textproc_buffer_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 2) {
    if (i % 2 == 0) {
      acc = acc * i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3000) {
      break;
    }
    if (acc < 0 && i > 30) {
      continue;
    }
  }
  return acc;
}

int textproc_buffer_loop1(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 900) {
      break;
    }
    if (acc < 0 && i > 9) {
      continue;
    }
  }
  return acc;
}

int textproc_buffer_fill(struct buffer_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 8;
  return textproc_buffer_length(node);
}

int textproc_buffer_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'y') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("textproc_buffer_count", hits);
  return hits;
}

void textproc_buffer_scale(struct buffer_node *head) {
  struct buffer_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 4;
    cur = cur->next;
  }
}

int textproc_buffer_main(int argc) {
  int total = 0;
  total = total + textproc_buffer_loop0(1, 2);
  total = total + textproc_buffer_loop1(2, 3);
  if (total > textproc_buffer_limit) {
    textproc_buffer_errors = textproc_buffer_errors + 1;
  }
  return total;
}
